//! End-to-end acceptance run: one pass/fail line per criterion, exact
//! arithmetic throughout. Exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};

use simplicial_hga::certificate::Certificate;
use simplicial_hga::face_rings::{hh_free_loops, mayer_vietoris_check, tor_loops, FaceBasis, FaceRing, SimplicialPoset};
use simplicial_hga::homlin::monomials_of_degree;
use simplicial_hga::ring::CoefficientRing;
use simplicial_hga::suites;

const Q: CoefficientRing = CoefficientRing::Rationals;

type Outcome = Result<String, String>;

fn all_pass(certs: &[Certificate]) -> Outcome {
    match certs.iter().find(|c| !c.passed()) {
        None => Ok(format!("{} certificates", certs.len())),
        Some(c) => Err(format!("{} [{}]: {}", c.identity, c.instance, c.witness.as_deref().unwrap_or(""))),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialPoset {
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
    SimplicialPoset::from_facets(n, &facets).expect("valid complex")
}

fn square() -> SimplicialPoset {
    complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
}

fn two_points() -> SimplicialPoset {
    complex(2, &[&[1], &[2]])
}

fn vertex() -> SimplicialPoset {
    complex(1, &[&[1]])
}

fn criterion_1() -> Outcome {
    all_pass(&suites::operad_suite(5, 5))
}

fn criterion_2() -> Outcome {
    let certs = suites::cup_suite(1000, 2024).map_err(|e| e.to_string())?;
    all_pass(&certs)
}

fn criterion_3() -> Outcome {
    let certs = suites::aw_shuffle_suite(6, 3, 3).map_err(|e| e.to_string())?;
    all_pass(&certs)
}

fn criterion_4() -> Outcome {
    all_pass(&suites::aw_s_suite(4, 4))
}

fn criterion_5() -> Outcome {
    let certs = suites::bt_formality_suite(2, 6, 3, 3).map_err(|e| e.to_string())?;
    all_pass(&certs)
}

fn criterion_6() -> Outcome {
    let sq = FaceRing::new(square());
    // monomials in t1..t4 divisible by neither t1t3 nor t2t4
    let oracle: Vec<usize> = (0..=3)
        .map(|d| monomials_of_degree(&[1; 4], d).into_iter().filter(|m| !(m[0] > 0 && m[2] > 0) && !(m[1] > 0 && m[3] > 0)).count())
        .collect();
    ensure(oracle == vec![1, 4, 8, 12], || format!("monomial oracle gave {oracle:?}"))?;
    ensure(sq.hilbert(3) == oracle, || format!("face ring dims {:?}", sq.hilbert(3)))?;
    let mut certs = sq.check_relations();
    for degree in (0..=8).step_by(2) {
        let dim = sq.dim(degree);
        let limit = sq.limit_dimension(degree, Q).map_err(|e| e.to_string())?;
        let generated = sq.generated_dimension(degree, Q).map_err(|e| e.to_string())?;
        ensure(limit == dim && generated == dim, || format!("degree {degree}: basis {dim}, limit {limit}, generated {generated}"))?;
    }
    let p = square();
    let ids = |p: &SimplicialPoset, names: &[&str]| -> BTreeSet<usize> { names.iter().map(|n| p.find(n).expect("element")).collect() };
    let path1 = ids(&p, &["0̂", "1", "2", "3", "1,2", "2,3"]);
    let path2 = ids(&p, &["0̂", "1", "3", "4", "3,4", "1,4"]);
    let everything: BTreeSet<usize> = (0..p.len()).collect();
    let pts = two_points();
    let left = ids(&pts, &["0̂", "1"]);
    let right = ids(&pts, &["0̂", "2"]);
    for (poset, a, b) in [(&p, &path1, &path2), (&p, &everything, &everything), (&pts, &left, &right)] {
        certs.extend(mayer_vietoris_check(poset, a, b, 8, Q).map_err(|e| e.to_string())?);
        let h = |keep: &BTreeSet<usize>| FaceRing::new(poset.subposet(keep).expect("subposet").0).hilbert(4);
        let meet: BTreeSet<usize> = a.intersection(b).copied().collect();
        let (h0, h1, h2, h12) = (FaceRing::new(poset.clone()).hilbert(4), h(a), h(b), h(&meet));
        ensure((0..=4).all(|d| h0[d] + h12[d] == h1[d] + h2[d]), || "Hilbert additivity".into())?;
    }
    all_pass(&certs)
}

type Vector = BTreeMap<(usize, FaceBasis), BigRational>;

/// Reduced row echelon basis of the span of `vectors` over the index set `keys`.
fn echelon(vectors: &[Vector], keys: &[(usize, FaceBasis)]) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> =
        vectors.iter().map(|v| keys.iter().map(|k| v.get(k).cloned().unwrap_or_else(BigRational::zero)).collect()).collect();
    let mut rank = 0;
    for c in 0..keys.len() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = BigRational::one() / rows[rank][c].clone();
        for x in rows[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..keys.len() {
                    let v = rows[rank][j].clone() * f.clone();
                    rows[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Kernel of the linear map sending `source[i]` to `images[i]`.
fn kernel(source: &[(usize, FaceBasis)], images: &[Vector], target: &[(usize, FaceBasis)]) -> Vec<Vector> {
    // row-reduce [images | identity] and keep the rows whose image part vanishes
    let n = source.len();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut r: Vec<BigRational> = target.iter().map(|k| images[i].get(k).cloned().unwrap_or_else(BigRational::zero)).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let width = target.len() + n;
    let mut rank = 0;
    for c in 0..target.len() {
        let Some(p) = (rank..n).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        for i in 0..n {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / rows[rank][c].clone();
                for j in 0..width {
                    let v = rows[rank][j].clone() * f.clone();
                    rows[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rows[rank..]
        .iter()
        .map(|r| {
            source
                .iter()
                .zip(&r[target.len()..])
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect()
        })
        .collect()
}

/// `Tor^R_n(𝕜, 𝕜)_q` for `n ≤ max_n`, `q ≤ max_q`, from a minimal graded free
/// resolution of `𝕜` over `R = 𝕜[Σ]`, built degree by degree.
fn tor_by_resolution(ring: &FaceRing, max_n: usize, max_q: usize) -> BTreeMap<(usize, usize), usize> {
    let bases: Vec<Vec<FaceBasis>> = (0..=max_q).map(|q| ring.basis(q)).collect();
    // r · (generator j, basis b) = (j, r b)
    let act = |r: &FaceBasis, v: &Vector| -> Vector {
        let mut out = Vector::new();
        let re = ring.basis_element(r);
        for ((j, b), c) in v {
            for (b2, e) in &ring.coordinates(&ring.multiply(&re, &ring.basis_element(b))) {
                let entry = out.entry((*j, b2.clone())).or_insert_with(BigRational::zero);
                *entry += c.clone() * BigRational::from_integer((*e).into());
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    // degree-q basis of a free module with generators in the given degrees
    let free_basis = |gens: &[usize], q: usize| -> Vec<(usize, FaceBasis)> {
        let mut out = Vec::new();
        for (j, &a) in gens.iter().enumerate() {
            if a <= q {
                out.extend(bases[q - a].iter().map(|b| (j, b.clone())));
            }
        }
        out
    };
    let mut result = BTreeMap::from([((0, 0), 1)]);
    // F_0 = R, d_0 = augmentation
    let mut gens: Vec<usize> = vec![0];
    let mut images: Vec<Vector> = vec![Vector::new()];
    let mut prev_gens: Vec<usize> = vec![];
    for n in 0..max_n {
        let mut new_gens = Vec::new();
        let mut new_images: Vec<Vector> = Vec::new();
        for q in 1..=max_q {
            let source = free_basis(&gens, q);
            let kernel_q: Vec<Vector> = if n == 0 {
                source.iter().map(|k| Vector::from([(k.clone(), BigRational::one())])).collect()
            } else {
                let target = free_basis(&prev_gens, q);
                let imgs: Vec<Vector> = source.iter().map(|(j, b)| act(b, &images[*j])).collect();
                kernel(&source, &imgs, &target)
            };
            // the part generated by earlier generators
            let mut generated: Vec<Vector> = Vec::new();
            for (g, &a) in new_gens.iter().enumerate() {
                if a < q {
                    for r in &bases[q - a] {
                        generated.push(act(r, &new_images[g]));
                    }
                }
            }
            let mut rank = echelon(&generated, &source).len();
            for v in kernel_q {
                generated.push(v.clone());
                let r = echelon(&generated, &source).len();
                if r > rank {
                    rank = r;
                    new_gens.push(q);
                    new_images.push(v);
                } else {
                    generated.pop();
                }
            }
        }
        for &a in &new_gens {
            *result.entry((n + 1, a)).or_insert(0) += 1;
        }
        prev_gens = std::mem::replace(&mut gens, new_gens);
        images = new_images;
    }
    result
}

fn criterion_7() -> Outcome {
    let tor_totals = |ring: &FaceRing, max_n: usize, max_q: usize| -> Result<(Vec<usize>, Vec<usize>), String> {
        let oracle = tor_by_resolution(ring, max_n, max_q);
        let bar = tor_loops(ring, max_q, Q).map_err(|e| e.to_string())?;
        for n in 0..=max_n {
            for q in 0..=max_q {
                let o = oracle.get(&(n, q)).copied().unwrap_or(0);
                let b = bar.rank(n, q as i64);
                ensure(o == b, || format!("Tor_{n} in degree {q}: resolution {o}, bar {b}"))?;
            }
        }
        let totals_o: Vec<usize> = (0..=max_n).map(|n| oracle.iter().filter(|((m, _), _)| *m == n).map(|(_, r)| r).sum()).collect();
        Ok((totals_o, bar.totals(max_n)))
    };
    let (oracle, bar) = tor_totals(&FaceRing::new(two_points()), 3, 6)?;
    ensure(oracle == vec![1, 2, 2, 2] && bar == oracle, || format!("two points: resolution {oracle:?}, bar {bar:?}"))?;
    let one = FaceRing::new(vertex());
    tor_totals(&one, 3, 8)?;
    let bar = tor_loops(&one, 8, Q).map_err(|e| e.to_string())?;
    ensure(bar.ranks == BTreeMap::from([((0, 0), 1), ((1, 2), 1)]), || format!("one vertex: {:?}", bar.ranks))?;
    // HH of 𝕜[t] against direct Hochschild chains on exponent tuples
    let hh = hh_free_loops(&one, 10, Q).map_err(|e| e.to_string())?;
    for q in 0..=10usize {
        for n in 0..=5 {
            let oracle = if q % 2 == 1 { 0 } else { brute_force_hh_polynomial(n, (q / 2) as u32) };
            ensure(hh.rank(n, q as i64) == oracle, || format!("HH_{n} in degree {q}: {} vs {oracle}", hh.rank(n, q as i64)))?;
        }
    }
    ensure(hh.ranks.keys().all(|(n, _)| *n <= 1), || "HH_{≥2} ≠ 0".into())?;
    Ok("Tor and HH ranks match the oracles".into())
}

fn rank_q(rows: Vec<Vec<i64>>) -> usize {
    let keys: Vec<(usize, FaceBasis)> = (0..rows.first().map_or(0, Vec::len))
        .map(|i| (i, FaceBasis { element: 0, exponent: vec![] }))
        .collect();
    let vectors: Vec<Vector> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .enumerate()
                .filter(|(_, x)| *x != 0)
                .map(|(i, x)| (keys[i].clone(), BigRational::from_integer(x.into())))
                .collect()
        })
        .collect();
    echelon(&vectors, &keys).len()
}

/// Hochschild homology of `𝕜[t]` on exponent tuples `(j_0; j_1, ..., j_n)`,
/// `j_i ≥ 1` for `i ≥ 1`, with `b = Σ_{i<n} (-1)^i (merge i, i+1) + (-1)^n (merge n into 0)`.
fn brute_force_hh_polynomial(n: usize, m: u32) -> usize {
    fn tuples(n: usize, m: u32) -> Vec<Vec<u32>> {
        fn rec(pos: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos == n + 1 {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for j in u32::from(pos > 0)..=left {
                cur.push(j);
                rec(pos + 1, n, left - j, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, m, &mut Vec::new(), &mut out);
        out
    }
    let b = |x: &Vec<u32>| -> Vec<(Vec<u32>, i64)> {
        let n = x.len() - 1;
        let mut out = Vec::new();
        for i in 0..n {
            let mut y = x[..i].to_vec();
            y.push(x[i] + x[i + 1]);
            y.extend_from_slice(&x[i + 2..]);
            out.push((y, if i % 2 == 0 { 1 } else { -1 }));
        }
        let mut y = vec![x[n] + x[0]];
        y.extend_from_slice(&x[1..n]);
        out.push((y, if n % 2 == 0 { 1 } else { -1 }));
        out
    };
    let matrix = |src: &[Vec<u32>], tgt: &[Vec<u32>]| -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; tgt.len()]; src.len()];
        for (j, s) in src.iter().enumerate() {
            for (y, c) in b(s) {
                let i = tgt.iter().position(|t| *t == y).expect("closed under b");
                rows[j][i] += c;
            }
        }
        rows
    };
    let cn = tuples(n, m);
    let rank_out = if n == 0 { 0 } else { rank_q(matrix(&cn, &tuples(n - 1, m))) };
    let rank_in = rank_q(matrix(&tuples(n + 1, m), &cn));
    cn.len() - rank_out - rank_in
}

fn criterion_8() -> Outcome {
    let mut certs = Vec::new();
    for p in [vertex(), SimplicialPoset::simplex(2), two_points(), square()] {
        certs.extend(suites::dj_formality_suite(&p, 6, 3, 3));
    }
    all_pass(&certs)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("operad morphism", criterion_1),
        ("cup-i calculus", criterion_2),
        ("AW-shuffle square", criterion_3),
        ("interval cuts and S", criterion_4),
        ("torus formality", criterion_5),
        ("face rings", criterion_6),
        ("loop spaces", criterion_7),
        ("DJ formality", criterion_8),
    ];
    let results: Vec<(Outcome, f64)> = thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    (f(), start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| (Err("panicked".into()), 0.0))).collect()
    });
    let mut ok = true;
    for (i, ((name, _), (outcome, secs))) in criteria.iter().zip(results).enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}, {secs:.1}s)", i + 1),
            Err(why) => {
                ok = false;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
