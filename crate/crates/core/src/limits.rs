//! Finite limits and colimits of acts, and epi-mono image factorization.

use std::sync::Arc;

use crate::act::{same_monoid, RightAct};
use crate::congruence::congruence_labels;
use crate::error::{ActError, Result};
use crate::hom::ActHom;
use crate::monoid::Monoid;

/// Disjoint union with its injections; carriers are concatenated in order.
pub fn coproduct(monoid: Arc<Monoid>, acts: &[RightAct]) -> Result<(RightAct, Vec<ActHom>)> {
    if acts.iter().any(|a| !same_monoid(a.monoid(), &monoid)) {
        return Err(ActError::MonoidMismatch);
    }
    let n = monoid.size();
    let mut action = Vec::new();
    let mut offsets = Vec::with_capacity(acts.len());
    let mut offset = 0;
    for act in acts {
        offsets.push(offset);
        action.extend(act.flat().iter().map(|&y| y + offset));
        offset += act.size();
    }
    debug_assert_eq!(action.len(), offset * n);
    let sum = RightAct::from_flat_unchecked(monoid, offset, action);
    let injections = acts
        .iter()
        .zip(offsets)
        .map(|(act, off)| {
            ActHom::new_unchecked(act.clone(), sum.clone(), (off..off + act.size()).collect())
        })
        .collect();
    Ok((sum, injections))
}

/// The copairing `[f_1, ..., f_k]: X_1 ⊔ ... ⊔ X_k -> Z`.
pub fn copair(sum: &RightAct, maps: &[ActHom], target: &RightAct) -> Result<ActHom> {
    let mut map = Vec::with_capacity(sum.size());
    for f in maps {
        if f.target() != target {
            return Err(ActError::TargetMismatch);
        }
        map.extend_from_slice(f.map());
    }
    ActHom::new(sum.clone(), target.clone(), map)
}

/// Cartesian product with its projections. Elements are tuples in
/// lexicographic order, first factor most significant; the empty product is
/// the one-point act.
pub fn product(monoid: Arc<Monoid>, acts: &[RightAct]) -> Result<(RightAct, Vec<ActHom>)> {
    if acts.iter().any(|a| !same_monoid(a.monoid(), &monoid)) {
        return Err(ActError::MonoidMismatch);
    }
    let sizes: Vec<usize> = acts.iter().map(RightAct::size).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut idx: usize| {
        let mut tuple = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            tuple[i] = idx % sizes[i];
            idx /= sizes[i];
        }
        tuple
    };
    let encode = |tuple: &[usize]| {
        tuple
            .iter()
            .zip(&sizes)
            .fold(0, |acc, (&t, &s)| acc * s + t)
    };
    let n = monoid.size();
    let mut action = Vec::with_capacity(total * n);
    let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();
    for tuple in &tuples {
        for m in 0..n {
            let moved: Vec<usize> = tuple.iter().zip(acts).map(|(&t, a)| a.act(t, m)).collect();
            action.push(encode(&moved));
        }
    }
    let prod = RightAct::from_flat_unchecked(monoid, total, action);
    let projections = acts
        .iter()
        .enumerate()
        .map(|(i, act)| {
            ActHom::new_unchecked(
                prod.clone(),
                act.clone(),
                tuples.iter().map(|t| t[i]).collect(),
            )
        })
        .collect();
    Ok((prod, projections))
}

fn check_parallel(f: &ActHom, g: &ActHom) -> Result<()> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(ActError::NotParallel);
    }
    Ok(())
}

/// The subact `{x | f(x) = g(x)}` with its inclusion.
pub fn equalizer(f: &ActHom, g: &ActHom) -> Result<(RightAct, ActHom)> {
    check_parallel(f, g)?;
    let elements: Vec<usize> = (0..f.source().size())
        .filter(|&x| f.apply(x) == g.apply(x))
        .collect();
    let sub = f.source().restrict(&elements)?;
    let incl = ActHom::new_unchecked(sub.clone(), f.source().clone(), elements);
    Ok((sub, incl))
}

/// `{(x, y) | f(x) = g(y)}` in lexicographic order, with both projections.
pub fn pullback(f: &ActHom, g: &ActHom) -> Result<(RightAct, ActHom, ActHom)> {
    if f.target() != g.target() {
        return Err(ActError::TargetMismatch);
    }
    let (x, y) = (f.source(), g.source());
    let pairs: Vec<(usize, usize)> = (0..x.size())
        .flat_map(|a| (0..y.size()).map(move |b| (a, b)))
        .filter(|&(a, b)| f.apply(a) == g.apply(b))
        .collect();
    let mut index = vec![usize::MAX; x.size() * y.size()];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index[a * y.size() + b] = i;
    }
    let monoid = x.monoid().clone();
    let n = monoid.size();
    let mut action = Vec::with_capacity(pairs.len() * n);
    for &(a, b) in &pairs {
        for m in 0..n {
            action.push(index[x.act(a, m) * y.size() + y.act(b, m)]);
        }
    }
    let pb = RightAct::from_flat_unchecked(monoid, pairs.len(), action);
    let p1 = ActHom::new_unchecked(pb.clone(), x.clone(), pairs.iter().map(|p| p.0).collect());
    let p2 = ActHom::new_unchecked(pb.clone(), y.clone(), pairs.iter().map(|p| p.1).collect());
    Ok((pb, p1, p2))
}

/// Quotient of `act` by the smallest congruence containing `pairs`, with the
/// projection. Classes are numbered by least member.
pub fn quotient(act: &RightAct, pairs: &[(usize, usize)]) -> (RightAct, ActHom) {
    let (labels, classes) = congruence_labels(act, pairs);
    let q = act.quotient_by_labels(&labels, classes);
    let proj = ActHom::new_unchecked(act.clone(), q.clone(), labels);
    (q, proj)
}

/// Coequalizer of a parallel pair.
pub fn coequalizer(f: &ActHom, g: &ActHom) -> Result<(RightAct, ActHom)> {
    check_parallel(f, g)?;
    let pairs: Vec<(usize, usize)> = (0..f.source().size())
        .map(|x| (f.apply(x), g.apply(x)))
        .collect();
    Ok(quotient(f.target(), &pairs))
}

/// `f = mono ∘ epi` through the set-theoretic image.
#[derive(Clone, Debug)]
pub struct ImageFactorization {
    pub epi: ActHom,
    pub image: RightAct,
    pub mono: ActHom,
}

pub fn image_factorize(f: &ActHom) -> ImageFactorization {
    let target = f.target();
    let mut hit = vec![false; target.size()];
    for &y in f.map() {
        hit[y] = true;
    }
    let elements: Vec<usize> = (0..target.size()).filter(|&y| hit[y]).collect();
    let mut index = vec![usize::MAX; target.size()];
    for (i, &y) in elements.iter().enumerate() {
        index[y] = i;
    }
    let image = target
        .restrict(&elements)
        .expect("the image of a hom is a subact");
    let epi = ActHom::new_unchecked(
        f.source().clone(),
        image.clone(),
        f.map().iter().map(|&y| index[y]).collect(),
    );
    let mono = ActHom::new_unchecked(image.clone(), target.clone(), elements);
    ImageFactorization { epi, image, mono }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::hom::{are_isomorphic, enumerate_homs};
    use crate::structure::components;
    use crate::universe::Universe;

    #[test]
    fn empty_coproduct_is_initial() {
        let m = idempotent_monoid();
        let (sum, inj) = coproduct(m.clone(), &[]).unwrap();
        assert!(sum.is_empty() && inj.is_empty());
    }

    #[test]
    fn singleton_coproduct_is_identity() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m.clone());
        let (sum, inj) = coproduct(m, std::slice::from_ref(&a)).unwrap();
        assert_eq!(sum, a);
        assert_eq!(inj[0], ActHom::identity(&a));
    }

    #[test]
    fn coproduct_of_regular_acts_has_two_components() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m.clone());
        let (sum, inj) = coproduct(m, &[a.clone(), a]).unwrap();
        assert_eq!(sum.size(), 4);
        assert_eq!(components(&sum).len(), 2);
        assert!(inj.iter().all(ActHom::is_mono));
    }

    #[test]
    fn coproduct_universal_property() {
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 2);
            let reps = reps.representatives();
            for x in reps {
                for y in reps {
                    let (sum, inj) = coproduct(m.clone(), &[x.clone(), y.clone()]).unwrap();
                    for z in reps {
                        // cocones (f, g) correspond bijectively to homs out of the sum
                        let out = enumerate_homs(&sum, z).unwrap();
                        let cocones = enumerate_homs(x, z).unwrap().len()
                            * enumerate_homs(y, z).unwrap().len();
                        assert_eq!(out.len(), cocones);
                        for h in &out {
                            let f = h.after(&inj[0]).unwrap();
                            let g = h.after(&inj[1]).unwrap();
                            assert_eq!(&copair(&sum, &[f, g], z).unwrap(), h);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn empty_product_is_terminal_point() {
        let m = idempotent_monoid();
        let (p, proj) = product(m.clone(), &[]).unwrap();
        assert_eq!(p, RightAct::point(m));
        assert!(proj.is_empty());
    }

    #[test]
    fn product_universal_property() {
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 2);
            let reps = reps.representatives();
            for x in reps {
                for y in reps {
                    let (p, proj) = product(m.clone(), &[x.clone(), y.clone()]).unwrap();
                    assert_eq!(p.size(), x.size() * y.size());
                    for w in reps {
                        let into = enumerate_homs(w, &p).unwrap();
                        let cones = enumerate_homs(w, x).unwrap().len()
                            * enumerate_homs(w, y).unwrap().len();
                        assert_eq!(into.len(), cones);
                        let mut legs: Vec<_> = into
                            .iter()
                            .map(|h| {
                                (
                                    proj[0].after(h).unwrap().map().to_vec(),
                                    proj[1].after(h).unwrap().map().to_vec(),
                                )
                            })
                            .collect();
                        legs.sort();
                        legs.dedup();
                        assert_eq!(legs.len(), cones);
                    }
                }
            }
        }
    }

    #[test]
    fn equalizer_of_equal_maps_is_source() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m);
        let id = ActHom::identity(&a);
        let (eq, incl) = equalizer(&id, &id).unwrap();
        assert_eq!(eq, a);
        assert!(incl.is_iso());
    }

    #[test]
    fn equalizer_and_coequalizer_universal_properties() {
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 2);
            let reps = reps.representatives();
            for x in reps {
                for y in reps {
                    let homs = enumerate_homs(x, y).unwrap();
                    for f in &homs {
                        for g in &homs {
                            let (_, incl) = equalizer(f, g).unwrap();
                            let (_, proj) = coequalizer(f, g).unwrap();
                            for w in reps {
                                // homs into X equalizing f, g factor uniquely
                                let equalizing = enumerate_homs(w, x)
                                    .unwrap()
                                    .into_iter()
                                    .filter(|h| f.after(h).unwrap() == g.after(h).unwrap())
                                    .count();
                                assert_eq!(
                                    equalizing,
                                    enumerate_homs(w, incl.source()).unwrap().len()
                                );
                                // homs out of Y coequalizing f, g factor uniquely
                                let coequalizing = enumerate_homs(y, w)
                                    .unwrap()
                                    .into_iter()
                                    .filter(|h| h.after(f).unwrap() == h.after(g).unwrap())
                                    .count();
                                assert_eq!(
                                    coequalizing,
                                    enumerate_homs(proj.target(), w).unwrap().len()
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coequalizer_of_coproduct_injections_is_fold() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m.clone());
        let (_, inj) = coproduct(m, &[a.clone(), a.clone()]).unwrap();
        let (q, proj) = coequalizer(&inj[0], &inj[1]).unwrap();
        assert!(are_isomorphic(&q, &a).is_some());
        assert!(proj.is_epi());
    }

    #[test]
    fn coequalizer_of_equal_maps_is_iso() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m);
        let id = ActHom::identity(&a);
        let (_, proj) = coequalizer(&id, &id).unwrap();
        assert!(proj.is_iso());
    }

    #[test]
    fn kernel_pair_coequalizer_recovers_image() {
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 3);
            for x in reps.representatives() {
                for y in reps.representatives() {
                    for h in enumerate_homs(x, y).unwrap() {
                        let (_, k1, k2) = pullback(&h, &h).unwrap();
                        let (q, _) = coequalizer(&k1, &k2).unwrap();
                        let im = image_factorize(&h).image;
                        assert!(are_isomorphic(&q, &im).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_of_identities_is_diagonal() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m);
        let id = ActHom::identity(&a);
        let (pb, p1, p2) = pullback(&id, &id).unwrap();
        assert_eq!(pb.size(), a.size());
        assert!(p1.is_iso() && p2.is_iso());
    }

    #[test]
    fn kernel_pair_projections_equal_iff_mono() {
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 3);
            for x in reps.representatives() {
                for y in reps.representatives() {
                    for h in enumerate_homs(x, y).unwrap() {
                        let (_, p1, p2) = pullback(&h, &h).unwrap();
                        assert_eq!(p1 == p2, h.is_mono());
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_of_subact_inclusions_is_intersection() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m.clone());
        let (sum, _) = coproduct(m, &[a.clone(), a]).unwrap();
        // subacts {0,1,3} and {1,2,3}: 1 = e in the first copy, 3 = e in the second
        let left = [0, 1, 3];
        let right = [1, 2, 3];
        let inc = |els: &[usize]| {
            ActHom::new(sum.restrict(els).unwrap(), sum.clone(), els.to_vec()).unwrap()
        };
        let (pb, p1, _) = pullback(&inc(&left), &inc(&right)).unwrap();
        let mut carrier: Vec<usize> = (0..pb.size()).map(|i| left[p1.apply(i)]).collect();
        carrier.sort();
        assert_eq!(carrier, vec![1, 3]);
    }

    #[test]
    fn pullback_requires_common_target() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m.clone());
        let p = RightAct::point(m);
        let f = ActHom::identity(&a);
        let g = ActHom::identity(&p);
        assert_eq!(pullback(&f, &g).unwrap_err(), ActError::TargetMismatch);
        assert_eq!(equalizer(&f, &g).unwrap_err(), ActError::NotParallel);
    }

    #[test]
    fn image_factorization_composes_back() {
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 3);
            for x in reps.representatives() {
                for y in reps.representatives() {
                    for h in enumerate_homs(x, y).unwrap() {
                        let fact = image_factorize(&h);
                        assert!(fact.epi.is_epi() && fact.mono.is_mono());
                        assert_eq!(fact.mono.after(&fact.epi).unwrap(), h);
                        if h.is_iso() {
                            assert!(fact.epi.is_iso() && fact.mono.is_iso());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fold_map_has_full_image() {
        let m = idempotent_monoid();
        let a = RightAct::regular(m.clone());
        let (sum, _) = coproduct(m, &[a.clone(), a.clone()]).unwrap();
        let fold = ActHom::new(sum, a.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(image_factorize(&fold).image, a);
    }

    #[test]
    fn image_is_functorial_on_commuting_squares() {
        // alpha∘f = g∘beta induces im f -> im g compatible with the monos
        for m in small_monoids() {
            let reps = Universe::enumerate(m.clone(), 2);
            let reps = reps.representatives();
            for x in reps {
                for y in reps {
                    for f in enumerate_homs(x, y).unwrap() {
                        let fi = image_factorize(&f);
                        for g in enumerate_homs(x, y).unwrap() {
                            let gi = image_factorize(&g);
                            for alpha in enumerate_homs(y, y).unwrap() {
                                for beta in enumerate_homs(x, x).unwrap() {
                                    if alpha.after(&f).unwrap() != g.after(&beta).unwrap() {
                                        continue;
                                    }
                                    let induced = enumerate_homs(&fi.image, &gi.image)
                                        .unwrap()
                                        .into_iter()
                                        .filter(|k| {
                                            gi.mono.after(k).unwrap()
                                                == alpha.after(&fi.mono).unwrap()
                                        })
                                        .count();
                                    assert_eq!(induced, 1);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
