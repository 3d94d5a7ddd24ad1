use std::collections::{BTreeMap, BTreeSet};

use super::*;
use crate::bar_hga::{BarWord, Gen, HochschildChain, HochschildWord, UNIT};
use crate::chains::Cochain;
use crate::homlin::monomials_of_degree;
use crate::lincomb::LinComb;
use crate::ring::CoefficientRing;
use crate::simplicial::SimplicialSet;
use crate::surjections::Surjection;

const Q: CoefficientRing = CoefficientRing::Rationals;

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialPoset {
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
    SimplicialPoset::from_facets(n, &facets).unwrap()
}

fn square() -> SimplicialPoset {
    complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
}

fn two_points() -> SimplicialPoset {
    complex(2, &[&[1], &[2]])
}

/// Two edges on the same pair of vertices.
fn digon() -> SimplicialPoset {
    PosetSpec::from_json(
        r#"{"vertices": [1, 2], "elements": [
            {"id": "a", "rank": 1, "vertices": [1]},
            {"id": "b", "rank": 1, "vertices": [2]},
            {"id": "A", "rank": 2, "covers": ["a", "b"]},
            {"id": "B", "rank": 2, "covers": ["a", "b"]}]}"#,
    )
    .unwrap()
    .build()
    .unwrap()
}

/// Two triangles glued along their boundary.
fn pillow() -> PosetSpec {
    PosetSpec::from_json(
        r#"{"vertices": [1, 2, 3], "elements": [
            {"id": "a", "rank": 1, "vertices": [1]},
            {"id": "b", "rank": 1, "vertices": [2]},
            {"id": "c", "rank": 1, "vertices": [3]},
            {"id": "ab", "rank": 2, "covers": ["a", "b"]},
            {"id": "ac", "rank": 2, "covers": ["a", "c"]},
            {"id": "bc", "rank": 2, "covers": ["b", "c"]},
            {"id": "T", "rank": 3, "covers": ["ab", "ac", "bc"]},
            {"id": "U", "rank": 3, "covers": ["ab", "ac", "bc"]}]}"#,
    )
    .unwrap()
}

/// Monomials of degree `d` in `n` variables avoiding the given square-free products.
fn count_monomials_avoiding(n: usize, d: usize, non_faces: &[&[usize]]) -> usize {
    monomials_of_degree(&vec![1; n], d)
        .into_iter()
        .filter(|m| !non_faces.iter().any(|f| f.iter().all(|&v| m[v - 1] > 0)))
        .count()
}

#[test]
fn validation_examples() {
    let spec = PosetSpec::from_json(r#"{"vertices": [1, 2, 3], "facets": [[1, 2], [2, 3]]}"#).unwrap();
    let report = spec.validate().unwrap();
    assert!(report.valid && report.is_complex);
    assert!(report.ghost_vertices.is_empty());
    assert_eq!(report.f_vector, vec![1, 3, 2]);

    let report = pillow().validate().unwrap();
    assert!(report.valid && !report.is_complex, "{:?}", report.diagnostics);
    let p = pillow().build().unwrap();
    let (ab, ac) = (p.find("ab").unwrap(), p.find("ac").unwrap());
    assert_eq!(p.join(ab, ac).len(), 2);
    assert!(report.multiple_joins.iter().any(|(x, y, j)| x == "ab" && y == "ac" && j.len() == 2));

    let bad = PosetSpec::from_json(
        r#"{"vertices": [1, 2], "elements": [
            {"id": "a", "rank": 1, "vertices": [1]},
            {"id": "b", "rank": 1, "vertices": [2]},
            {"id": "e", "rank": 2, "covers": ["a"]}]}"#,
    )
    .unwrap();
    let report = bad.validate().unwrap();
    assert!(!report.valid && !report.diagnostics.is_empty());
    assert!(bad.build().is_err());

    let ghosts = PosetSpec::from_json(r#"{"vertices": [1, 2, 3], "facets": [[1]]}"#).unwrap().validate().unwrap();
    assert_eq!(ghosts.ghost_vertices, vec!["2", "3"]);
    assert!(PosetSpec::from_json(r#"{"vertices": [1], "facets": [[1]], "extra": 0}"#).is_err());
}

#[test]
fn face_ring_dimensions() {
    let edge = FaceRing::new(SimplicialPoset::simplex(2));
    assert_eq!(edge.hilbert(5), vec![1, 2, 3, 4, 5, 6]);

    let sq = FaceRing::new(square());
    assert_eq!(sq.hilbert(3), vec![1, 4, 8, 12]);
    let oracle: Vec<usize> = (0..=5).map(|d| count_monomials_avoiding(4, d, &[&[1, 3], &[2, 4]])).collect();
    assert_eq!(sq.hilbert(5), oracle);
    assert!(sq.multiply(&sq.vertex(0), &sq.vertex(2)).is_zero());
    assert!(sq.multiply(&sq.vertex(1), &sq.vertex(3)).is_zero());
    assert!(!sq.multiply(&sq.vertex(0), &sq.vertex(1)).is_zero());

    let pts = FaceRing::new(two_points());
    assert!(pts.multiply(&pts.vertex(0), &pts.vertex(1)).is_zero());
    assert_eq!(pts.hilbert(3), vec![1, 2, 2, 2]);

    // the digon: 𝕜[t₁, t₂, t_A, t_B]/(t_A t_B, t₁t₂ − t_A − t_B)
    let dg = FaceRing::new(digon());
    assert_eq!(dg.hilbert(3), vec![1, 2, 4, 6]);
}

#[test]
fn relations_and_limit_presentation() {
    let posets = [SimplicialPoset::simplex(3), square(), two_points(), digon(), pillow().build().unwrap()];
    for p in posets {
        let r = FaceRing::new(p);
        for c in r.check_relations() {
            assert!(c.passed(), "{c:?}");
        }
        for degree in (0..=8).step_by(2) {
            let dim = r.dim(degree);
            assert_eq!(r.limit_dimension(degree, Q).unwrap(), dim, "limit in degree {degree}");
            assert_eq!(r.generated_dimension(degree, Q).unwrap(), dim, "generated in degree {degree}");
        }
        for degree in (0..=6).step_by(2) {
            for b in r.basis(degree) {
                let e = r.basis_element(&b);
                assert!(r.is_compatible(&e));
                assert_eq!(r.coordinates(&e), LinComb::basis(b.clone()));
            }
        }
    }
}

#[test]
fn pullbacks_are_functorial() {
    // square ⊂ full simplex on four vertices, then the identity folding
    let sq = square();
    let (simplex, fold) = VertexPreservingMap::folding(&sq);
    let (big, fold_big) = VertexPreservingMap::folding(&simplex);
    let composite = fold_big.after(&fold);
    let (rs, rsimplex, rbig) = (FaceRing::new(sq.clone()), FaceRing::new(simplex.clone()), FaceRing::new(big));
    for sigma in 0..rbig.poset().len() {
        let t = rbig.t(sigma);
        let once = rbig.pullback(&composite, &rs, &t);
        let twice = rsimplex.pullback(&fold, &rs, &rbig.pullback(&fold_big, &rsimplex, &t));
        assert_eq!(once, twice);
        // κ*(t_σ') = Σ_{κ(σ) = σ'} t_σ
        let mut expected = rs.zero(t.degree());
        for s in 0..sq.len() {
            if composite.image(s) == sigma {
                expected = expected.add(&rs.t(s));
            }
        }
        assert_eq!(once, expected);
    }
    // multiplicativity: the folding makes 𝕜[Σ] an algebra over the polynomial ring
    for a in 0..simplex.len() {
        for b in 0..simplex.len() {
            let prod = rsimplex.multiply(&rsimplex.t(a), &rsimplex.t(b));
            let lhs = rsimplex.pullback(&fold, &rs, &prod);
            let rhs = rs.multiply(&rsimplex.pullback(&fold, &rs, &rsimplex.t(a)), &rsimplex.pullback(&fold, &rs, &rsimplex.t(b)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn mayer_vietoris_examples() {
    let sq = square();
    let ids = |names: &[&str]| -> BTreeSet<usize> { names.iter().map(|n| sq.find(n).unwrap()).collect() };
    let path1 = ids(&["0̂", "1", "2", "3", "1,2", "2,3"]);
    let path2 = ids(&["0̂", "1", "3", "4", "3,4", "1,4"]);
    let all: BTreeSet<usize> = (0..sq.len()).collect();
    for (p1, p2) in [(&path1, &path2), (&all, &all)] {
        let certs = mayer_vietoris_check(&sq, p1, p2, 8, Q).unwrap();
        assert_eq!(certs.len(), 5);
        assert!(certs.iter().all(|c| c.passed()), "{certs:?}");
    }
    let pts = two_points();
    let a: BTreeSet<usize> = [pts.bottom(), pts.find("1").unwrap()].into();
    let b: BTreeSet<usize> = [pts.bottom(), pts.find("2").unwrap()].into();
    assert!(mayer_vietoris_check(&pts, &a, &b, 8, Q).unwrap().iter().all(|c| c.passed()));
    let missing: BTreeSet<usize> = [pts.bottom()].into();
    assert!(matches!(mayer_vietoris_check(&pts, &a, &missing, 4, Q), Err(crate::error::Error::NotACover(_))));

    // Hilbert additivity
    let (s1, _) = sq.subposet(&path1).unwrap();
    let (s2, _) = sq.subposet(&path2).unwrap();
    let (s12, _) = sq.subposet(&path1.intersection(&path2).copied().collect()).unwrap();
    let h = |p: SimplicialPoset| FaceRing::new(p).hilbert(5);
    let (h0, h1, h2, h12) = (h(sq.clone()), h(s1), h(s2), h(s12));
    for d in 0..=5 {
        assert_eq!(h0[d] + h12[d], h1[d] + h2[d]);
    }
}

#[test]
fn dj_one_vertex_specializes_to_the_circle() {
    let p = complex(1, &[&[1]]);
    let v = p.find("1").unwrap();
    let dj = DJFormality::new(p);
    let t = crate::torus_formality::TorusFormality::new(1);
    for d in 1..=3 {
        let ours = dj.f_sigma(v, &[d]);
        assert_eq!(ours.len(), t.f(&[d]).len());
        for (x, c) in &ours {
            assert_eq!(x.element, v);
            assert_eq!(t.f(&[d]).coefficient(&x.simplex), *c);
        }
    }
    let u = Surjection::new(vec![1, 2, 1]).unwrap();
    assert!(dj.verify_vanishing(&u, v, &[2]).unwrap().passed());
    assert!(dj.verify_vanishing(&Surjection::new(vec![1, 2]).unwrap(), v, &[1]).is_err());
}

#[test]
fn dj_edge_compatibility() {
    let dj = DJFormality::new(SimplicialPoset::simplex(2));
    let certs = dj.check_compatibility(6);
    // 0̂ ⋖ 1 and 0̂ ⋖ 2 only carry α = 0; 1 ⋖ 12 and 2 ⋖ 12 carry |α| = 0..=3
    assert_eq!(certs.len(), 2 + 2 * 4);
    assert!(certs.iter().all(|c| c.passed()), "{certs:?}");
}

#[test]
fn dj_two_points_vanishing() {
    let p = two_points();
    let dj = DJFormality::new(p.clone());
    let u = Surjection::new(vec![1, 2, 1]).unwrap();
    for v in ["1", "2"] {
        let s = p.find(v).unwrap();
        for d in 1..=3 {
            assert!(dj.verify_vanishing(&u, s, &[d]).unwrap().passed());
        }
    }
    let certs = dj.check_vanishing(4, 2, 3);
    assert!(!certs.is_empty() && certs.iter().all(|c| c.passed()));
}

#[test]
fn dj_subobject_agrees_with_colimit() {
    let p = square();
    let dj = DJFormality::new(p.clone());
    let space = dj.space();
    for sigma in p.maximal() {
        for alpha in [vec![1, 1], vec![2, 1], vec![1, 2]] {
            for (x, _) in &dj.f_sigma(sigma, &alpha) {
                assert!(space.contains(&x.simplex));
                assert_eq!(space.lift_subobject(&x.simplex).as_ref(), Some(x));
                for i in 0..=x.simplex.comps.len() {
                    let colim = space.face(x, i);
                    let sub = space.ambient().face(&x.simplex, i);
                    assert!(space.contains(&sub));
                    assert_eq!(space.lift_subobject(&sub), Some(colim));
                }
            }
        }
    }
    // a simplex supported on a non-face of the square is not in DJ_Σ
    let t = crate::torus_formality::TorusFormality::new(2);
    let map = crate::torus_formality::CoordinateMap::inclusion(4, vec![0, 2]).unwrap();
    for (x, _) in &map.on_base_chain(&t.f(&[1, 1])) {
        assert!(!space.contains(x));
    }
}

#[test]
fn dj_pillow_faces_stay_in_their_triangle() {
    let p = pillow().build().unwrap();
    let dj = DJFormality::new(p.clone());
    let (t, u) = (p.find("T").unwrap(), p.find("U").unwrap());
    let ft = dj.f_sigma(t, &[1, 1, 1]);
    let fu = dj.f_sigma(u, &[1, 1, 1]);
    // the same simplex of BT, two distinct simplices of the colimit
    assert_eq!(ft.len(), fu.len());
    assert!(ft.keys().all(|x| x.element == t) && fu.keys().all(|x| x.element == u));
    assert!(dj.check_compatibility(4).iter().all(|c| c.passed()));
    assert!(dj.check_vanishing(4, 2, 3).iter().all(|c| c.passed()));
}

#[test]
fn assembled_map_is_multiplicative() {
    for p in [square(), two_points(), digon()] {
        let ring = FaceRing::new(p.clone());
        let dj = DJFormality::new(p.clone());
        // dual cochains of simplices appearing in f_μ(y_α)
        let mut cochains: BTreeMap<i64, Vec<Cochain<DJSimplex, i64>>> = BTreeMap::new();
        for mu in p.maximal() {
            for d in 1..=2u32 {
                for alpha in crate::torus_formality::exponents(p.rank(mu), d) {
                    for (x, _) in &dj.f_sigma(mu, &alpha) {
                        let g = Cochain::dual_basis(x.clone());
                        cochains.entry(g.degree()).or_default().push(g);
                    }
                }
            }
        }
        let twos = &cochains[&2];
        let mut nonzero = 0;
        for g in twos {
            let e = dj.assemble(&ring, g).unwrap();
            assert!(ring.is_compatible(&e));
            nonzero += usize::from(!e.is_zero());
            for h in twos {
                let c = dj.check_multiplicative(&ring, g, h).unwrap();
                assert!(c.passed(), "{c:?}");
            }
        }
        assert!(nonzero > 0);
    }
}

#[test]
fn tor_of_small_face_rings() {
    let one = FaceRing::new(complex(1, &[&[1]]));
    let tor = tor_loops(&one, 10, Q).unwrap();
    let expected: BTreeMap<(usize, i64), usize> = [((0, 0), 1), ((1, 2), 1)].into();
    assert_eq!(tor.ranks, expected);

    let pts = FaceRing::new(two_points());
    let tor = tor_loops(&pts, 8, Q).unwrap();
    assert_eq!(tor.totals(4), vec![1, 2, 2, 2, 2]);
    for n in 1..=4 {
        assert_eq!(tor.rank(n, 2 * n as i64), 2);
    }

    let edge = FaceRing::new(SimplicialPoset::simplex(2));
    let tor = tor_loops(&edge, 8, Q).unwrap();
    assert_eq!(tor.totals(3), vec![1, 2, 1, 0]);
    assert_eq!(tor.rank(2, 4), 1);

    assert!(matches!(tor_loops(&edge, 4, CoefficientRing::Integers), Err(crate::error::Error::NotField(_))));
}

#[test]
fn hochschild_of_small_face_rings() {
    let one = FaceRing::new(complex(1, &[&[1]]));
    let hh = hh_free_loops(&one, 8, Q).unwrap();
    for q in (0..=8).step_by(2) {
        assert_eq!(hh.rank(0, q), 1);
        assert_eq!(hh.rank(1, q), usize::from(q > 0));
    }
    assert!(hh.ranks.keys().all(|(n, _)| *n <= 1));

    let empty = FaceRing::new(PosetSpec::from_json(r#"{"vertices": [1, 2], "facets": []}"#).unwrap().build().unwrap());
    let hh = hh_free_loops(&empty, 6, Q).unwrap();
    assert_eq!(hh.ranks, BTreeMap::from([((0, 0), 1)]));

    // on the edge, 1[t₁] · 1[t₂] = [t₁|t₂] − [t₂|t₁], a nonzero class in HH₂
    let edge = FaceRing::new(SimplicialPoset::simplex(2));
    let c = hochschild(&edge, 4).unwrap();
    let a = c.algebra();
    let gen = |label: &str| -> Gen { a.basis(2).into_iter().find(|&g| a.label(g) == label).unwrap() };
    let (t1, t2) = (gen("t1"), gen("t2"));
    let word = |letters: Vec<Gen>| HochschildWord {
        coefficient: UNIT,
        word: BarWord(letters),
    };
    let product = c.product(&word(vec![t1]), &word(vec![t2])).unwrap();
    let mut expected = HochschildChain::zero();
    expected.add_term(word(vec![t1, t2]), 1);
    expected.add_term(word(vec![t2, t1]), -1);
    assert_eq!(product, expected);
    assert!(c.differential_chain(&product).unwrap().is_zero());
    assert!(c.chains(3, 4).unwrap().is_empty());
}
