//! Subcommand implementations. Each returns the report text and whether a
//! queried property came out certified-no.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use actkit::cellular::{
    bousfield_colimit_oracle, bousfield_limit_oracle, colocalization_candidate,
    generated_coreflection,
};
use actkit::classify::{is_a_cogenerated, is_a_generated, is_delta_reflexive, is_eta_reflexive};
use actkit::format::{hom_index_notes, tensor_class_notes};
use actkit::selftest::{render, selftest};
use actkit::{
    components, is_indecomposable, morita_candidates, star_report, verify_morita, ActError,
    Approximation, Classifier, Context, Document, Evidence, RightAct, Universe, Verdict,
};

use crate::cache::warm;
use crate::{Failure, Format, Options};

pub struct Report {
    pub text: String,
    pub certified_no: bool,
    /// Nonzero exit without a certified-no verdict (failed selftest).
    pub failed: bool,
}

impl Report {
    fn new(text: String) -> Self {
        Report {
            text,
            certified_no: false,
            failed: false,
        }
    }
}

pub fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io {
        file: path.display().to_string(),
        error: e.to_string(),
    })?;
    Document::parse(&text).map_err(|error| Failure::Input {
        file: path.display().to_string(),
        error,
    })
}

fn first_act(doc: &Document, path: &Path) -> Result<RightAct, Failure> {
    doc.acts.first().cloned().ok_or_else(|| Failure::Input {
        file: path.display().to_string(),
        error: ActError::Parse {
            line: 1,
            message: "no act declared; the first act is used as A".into(),
        },
    })
}

fn lift(error: ActError) -> Failure {
    Failure::Library(error)
}

fn context(doc: &Document, path: &Path, bound: usize) -> Result<Context, Failure> {
    let a = first_act(doc, path)?;
    warm(&doc.monoid, bound);
    let ctx = Context::new(doc.monoid.clone(), a).map_err(lift)?;
    warm(ctx.endomorphism_monoid(), bound);
    Ok(ctx)
}

pub fn validate(paths: &[std::path::PathBuf], opts: &Options) -> Result<Report, Failure> {
    let mut out = String::new();
    for path in paths {
        let doc = load(path)?;
        let (n, k, h) = (doc.monoid.size(), doc.acts.len(), doc.homs.len());
        match opts.format {
            Format::Machine => {
                writeln!(out, "VALID {} order={n} acts={k} homs={h}", path.display())
            }
            Format::Text => writeln!(
                out,
                "{}: ok (monoid of order {n}, {k} acts, {h} homs)",
                path.display()
            ),
        }
        .unwrap();
    }
    Ok(Report::new(out))
}

/// Properties `classify` understands, by the side they are evaluated on.
pub const ACT_PROPERTIES: [&str; 3] = ["indecomposable", "weak-self-projective", "pullback-flat"];
pub const M_PROPERTIES: [&str; 3] = ["delta-reflexive", "a-generated", "colocal"];
pub const E_PROPERTIES: [&str; 3] = ["eta-reflexive", "a-cogenerated", "local"];

fn exact(holds: bool, reason: &'static str, witness: Evidence, bound: usize) -> Verdict {
    if holds {
        Verdict::yes(reason, bound)
    } else {
        Verdict::no(witness, bound)
    }
}

fn act_property(c: &Classifier, name: &str) -> Result<Verdict, Failure> {
    let ctx = c.context();
    let bound = c.bound();
    Ok(match name {
        "indecomposable" => {
            let parts = components(ctx.act());
            let witness = match parts.first() {
                Some(part) => Evidence::Act {
                    role: "component",
                    act: ctx.act().restrict(part).map_err(lift)?,
                },
                None => Evidence::Act {
                    role: "empty",
                    act: ctx.act().clone(),
                },
            };
            exact(
                is_indecomposable(ctx.act()),
                "one-component",
                witness,
                bound,
            )
        }
        "weak-self-projective" => c.weak_self_projective().map_err(lift)?,
        "pullback-flat" => c.pullback_flat().map_err(lift)?,
        _ => unreachable!("checked by caller"),
    })
}

fn m_property(c: &Classifier, name: &str, x: &RightAct) -> Result<Verdict, Failure> {
    let ctx = c.context();
    let bound = c.bound();
    let counit = || -> Result<Evidence, Failure> {
        Ok(Evidence::Hom {
            role: "counit",
            hom: ctx.counit(x).map_err(lift)?,
        })
    };
    Ok(match name {
        "delta-reflexive" => exact(
            is_delta_reflexive(ctx, x).map_err(lift)?,
            "counit-iso",
            counit()?,
            bound,
        ),
        "a-generated" => exact(
            is_a_generated(ctx, x).map_err(lift)?,
            "counit-epi",
            counit()?,
            bound,
        ),
        "colocal" => c.colocal(x).map_err(lift)?,
        _ => unreachable!("checked by caller"),
    })
}

fn e_property(c: &Classifier, name: &str, y: &RightAct) -> Result<Verdict, Failure> {
    let ctx = c.context();
    let bound = c.bound();
    let unit = || -> Result<Evidence, Failure> {
        Ok(Evidence::Hom {
            role: "unit",
            hom: ctx.unit(y).map_err(lift)?,
        })
    };
    Ok(match name {
        "eta-reflexive" => exact(
            is_eta_reflexive(ctx, y).map_err(lift)?,
            "unit-iso",
            unit()?,
            bound,
        ),
        "a-cogenerated" => exact(
            is_a_cogenerated(ctx, y).map_err(lift)?,
            "unit-mono",
            unit()?,
            bound,
        ),
        "local" => c.local(y).map_err(lift)?,
        _ => unreachable!("checked by caller"),
    })
}

fn push_verdict(
    out: &mut String,
    format: Format,
    name: &str,
    verdict: &Verdict,
    about: Option<String>,
) {
    match format {
        Format::Machine => writeln!(out, "{}", verdict.machine_line(name)).unwrap(),
        Format::Text => {
            write!(
                out,
                "{name}: {} at bound {}",
                verdict.status(),
                verdict.bound()
            )
            .unwrap();
            if let Some(about) = about {
                write!(out, " ({about})").unwrap();
            }
            out.push('\n');
            match verdict.evidence() {
                Some(Evidence::Reason(tag)) => writeln!(out, "  by rule {tag}").unwrap(),
                Some(e) => writeln!(out, "  witness {}", e.reference()).unwrap(),
                None => {
                    writeln!(out, "  no rule applies and no counterexample at this bound").unwrap()
                }
            }
        }
    }
}

pub fn classify(path: &Path, opts: &Options) -> Result<Report, Failure> {
    let doc = load(path)?;
    let ctx = context(&doc, path, opts.bound)?;
    let c = Classifier::new(ctx, opts.bound);
    let wanted = |p: &str| opts.property.as_deref().is_none_or(|q| q == p);
    let mut out = String::new();
    let mut certified_no = false;
    let mut record = |out: &mut String, name: String, v: Verdict, about: Option<String>| {
        certified_no |= v.is_no();
        push_verdict(out, opts.format, &name, &v, about);
    };
    for p in ACT_PROPERTIES.into_iter().filter(|p| wanted(p)) {
        record(&mut out, p.to_string(), act_property(&c, p)?, None);
    }
    for p in M_PROPERTIES.into_iter().filter(|p| wanted(p)) {
        for (i, x) in doc.acts.iter().enumerate().skip(1) {
            let about = Some(format!("X = act {i}, {:?}", x.rows()));
            record(&mut out, format!("{p}:x{i}"), m_property(&c, p, x)?, about);
        }
    }
    // E-side properties sweep the whole E-universe, so only on request
    if opts.property.is_some() {
        for p in E_PROPERTIES.into_iter().filter(|p| wanted(p)) {
            for (k, y) in c.e_universe().representatives().iter().enumerate() {
                let about = Some(format!("Y = E-representative {k}, {:?}", y.rows()));
                record(&mut out, format!("{p}:y{k}"), e_property(&c, p, y)?, about);
            }
        }
    }
    Ok(Report {
        text: out,
        certified_no: certified_no && opts.property.is_some(),
        failed: false,
    })
}

pub fn star(path: &Path, opts: &Options) -> Result<Report, Failure> {
    let doc = load(path)?;
    let ctx = context(&doc, path, opts.bound)?;
    let report = star_report(&ctx, opts.bound).map_err(lift)?;
    let mut out = String::new();
    if opts.format == Format::Text {
        writeln!(
            out,
            "A of size {}, endomorphism monoid of order {}",
            ctx.act().size(),
            ctx.endomorphism_monoid().size()
        )
        .unwrap();
    }
    let mut certified_no = false;
    for (name, v) in report.verdicts() {
        if opts.property.as_deref().is_none_or(|q| q == name) {
            certified_no |= v.is_no() && opts.property.is_some();
            push_verdict(&mut out, opts.format, name, v, None);
        }
    }
    Ok(Report {
        text: out,
        certified_no,
        failed: false,
    })
}

pub fn morita(path: &Path, opts: &Options) -> Result<Report, Failure> {
    let doc = load(path)?;
    let m = doc.monoid.clone();
    warm(&m, m.size());
    warm(&m, opts.bound);
    let mut out = String::new();
    let cands = morita_candidates(&m);
    if opts.format == Format::Text {
        writeln!(
            out,
            "{} candidate(s) over a monoid of order {}",
            cands.len(),
            m.size()
        )
        .unwrap();
    }
    for ctx in cands {
        let cert = verify_morita(&m, ctx.act(), opts.bound).map_err(lift)?;
        writeln!(out, "{}", cert.machine_line()).unwrap();
        if opts.format == Format::Text {
            let mut d = Document::new(m.clone());
            d.push_act(ctx.act().clone());
            let e = ctx.endomorphism_monoid();
            let note = vec![format!("endomorphism monoid table {:?}", e.rows())];
            out.push_str(&d.to_text_annotated(&[note]));
        }
    }
    Ok(Report::new(out))
}

fn approximations(c: &Classifier, x: &RightAct) -> Result<Vec<Approximation>, ActError> {
    Ok(vec![
        generated_coreflection(c, x)?,
        colocalization_candidate(c, x)?,
        bousfield_colimit_oracle(c, x)?,
        bousfield_limit_oracle(c, x)?,
    ])
}

pub fn cellular(path: &Path, opts: &Options) -> Result<Report, Failure> {
    let doc = load(path)?;
    let ctx = context(&doc, path, opts.bound)?;
    let c = Classifier::new(ctx, opts.bound);
    let mut out = String::new();
    for (i, x) in doc.acts.iter().enumerate().skip(1) {
        for approx in approximations(&c, x).map_err(lift)? {
            writeln!(out, "{} target=x{i}", approx.machine_line()).unwrap();
            if opts.format == Format::Text {
                let mut d = Document::new(doc.monoid.clone());
                d.push_act(approx.object.clone());
                d.push_act(approx.target.clone());
                d.push_hom(0, 1, approx.map.clone());
                out.push_str(&d.to_text());
            }
        }
        if opts.format == Format::Text {
            let hx = c.context().hom_act(x).map_err(lift)?;
            let thx = c.context().tensor_act(hx.underlying()).map_err(lift)?;
            let mut d = Document::new(c.context().endomorphism_monoid().clone());
            d.push_act(hx.underlying().clone());
            writeln!(out, "# H(X) as an act over the endomorphism monoid").unwrap();
            out.push_str(&d.to_text_annotated(&[hom_index_notes(&hx)]));
            for note in tensor_class_notes(&thx) {
                writeln!(out, "# {note}").unwrap();
            }
        }
    }
    Ok(Report::new(out))
}

pub fn universe(path: &Path, opts: &Options) -> Result<Report, Failure> {
    let doc = load(path)?;
    let m: Arc<_> = doc.monoid.clone();
    warm(&m, opts.bound);
    let u = Universe::cached(m.clone(), opts.bound);
    let mut out = String::new();
    match opts.format {
        Format::Machine => {
            let mut by_size = vec![0usize; opts.bound + 1];
            for a in u.representatives() {
                by_size[a.size()] += 1;
            }
            let sizes: Vec<String> = by_size.iter().map(usize::to_string).collect();
            writeln!(
                out,
                "UNIVERSE order={} bound={} count={} by-size={}",
                m.size(),
                opts.bound,
                u.len(),
                sizes.join(",")
            )
            .unwrap();
        }
        Format::Text => {
            let mut d = Document::new(m);
            for a in u.representatives() {
                d.push_act(a.clone());
            }
            out.push_str(&d.to_text());
        }
    }
    Ok(Report::new(out))
}

pub fn run_selftest(opts: &Options) -> Result<Report, Failure> {
    let reports = selftest(opts.bound, opts.seed);
    let mut out = String::new();
    match opts.format {
        Format::Machine => out.push_str(&render(&reports)),
        Format::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "criterion {:>2} {:<36} {} ({} checked, {} failed)",
                    r.number,
                    r.name,
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.checked,
                    r.failures
                )
                .unwrap();
                if let Some(f) = &r.first_failure {
                    writeln!(out, "   first failure: {f}").unwrap();
                }
            }
        }
    }
    if let Some(r) = reports.iter().find(|r| r.violation) {
        return Err(Failure::Selftest {
            report: out,
            detail: format!("criterion {} raised a theorem violation", r.number),
        });
    }
    Ok(Report {
        text: out,
        certified_no: false,
        failed: reports.iter().any(|r| !r.passed()),
    })
}
