//! Exhaustive invariant sweeps over small ranks and entries.
//!
//! Each check runs per rank as an independent cell; cells may run on a
//! rayon pool. Within a cell, cases are visited smallest first and the first
//! violation is reported.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::charoracle::{verify_gl_branching_identity, verify_schur_branching, verify_sp_branching_identity};
use crate::decomp::{
    cubic_split, enumerate_filtration, from_fundamental, is_cartan_shape, megapeel, megapeel_vectors, p_max, peel,
    to_fundamental, MegapeelCase,
};
use crate::error::Error;
use crate::gzbasis::basis_of;
use crate::rearrange::{h, h_sigma, h_sigma_inverse, peeling_split, r, Rearrangement};
use crate::sl2::{l_module, restrict_to_diagonal, LModule};
use crate::weights::{interlaces, DominantWeight, OrderType, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Semigroup,
    Decomp,
    Characters,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "semigroup" => Ok(Suite::Semigroup),
            "decomp" => Ok(Suite::Decomp),
            "characters" => Ok(Suite::Characters),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected semigroup, decomp, characters or all".to_string(),
            }),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Semigroup => "semigroup",
            Suite::Decomp => "decomp",
            Suite::Characters => "characters",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub max_rank: usize,
    pub max_entry: u32,
    /// Worker cap; `None` uses rayon's default.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub rank: usize,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }
}

type CheckFn = fn(usize, u32) -> Outcome;

struct Outcome {
    cases: u64,
    counterexample: Option<String>,
}

/// Runs `cases` in order until `ok` fails.
fn scan<T>(cases: impl IntoIterator<Item = T>, mut ok: impl FnMut(&T) -> Result<(), String>) -> Outcome {
    let mut count = 0;
    for c in cases {
        count += 1;
        if let Err(msg) = ok(&c) {
            return Outcome {
                cases: count,
                counterexample: Some(msg),
            };
        }
    }
    Outcome {
        cases: count,
        counterexample: None,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shape_size(p: &SkewShape) -> u64 {
    p.lambda().size() + p.mu().size()
}

/// Branching shapes of rank `n`, entries `≤ m`, smallest first.
fn branching_shapes(n: usize, m: u32) -> Vec<SkewShape> {
    let mut v = SkewShape::enumerate_branching(n, m);
    v.sort_by_key(|p| (shape_size(p), p.clone()));
    v
}

fn typed_shapes(sigma: &OrderType, m: u32) -> Vec<SkewShape> {
    let mut v = enumerate_filtration(sigma, m);
    v.sort_by_key(|p| (shape_size(p), p.clone()));
    v
}

fn rearrangements_ending_in_zero(n: usize, m: u32) -> Vec<Rearrangement> {
    let mut v: Vec<Rearrangement> = DominantWeight::enumerate(2 * n - 1, m)
        .into_iter()
        .map(|w| {
            let mut z: Vec<u32> = w.into();
            z.push(0);
            Rearrangement::new(z).expect("dominant")
        })
        .collect();
    v.reverse();
    v
}

fn between(p: &SkewShape, gamma: &DominantWeight) -> bool {
    interlaces(p.mu(), gamma).unwrap_or(false) && interlaces(gamma, &p.lambda().plus_extend()).unwrap_or(false)
}

// --- semigroup -------------------------------------------------------------

fn check_order_types_nonempty(n: usize, m: u32) -> Outcome {
    scan(branching_shapes(n, m), |p| {
        let types = p.order_types().map_err(|e| e.to_string())?;
        ensure(!types.is_empty(), || format!("{p}: no order type"))?;
        ensure(types.iter().all(|s| p.is_of_order_type(s)), || {
            format!("{p}: listed type does not hold")
        })
    })
}

fn check_closure(n: usize, m: u32) -> Outcome {
    let cases = OrderType::all(n).into_iter().flat_map(|sigma| {
        let shapes = typed_shapes(&sigma, m);
        let pairs: Vec<_> = shapes
            .iter()
            .flat_map(|p| shapes.iter().map(move |q| (p.clone(), q.clone())))
            .collect();
        pairs.into_iter().map(move |(p, q)| (sigma.clone(), p, q))
    });
    scan(cases, |(sigma, p, q)| {
        let sum = p.add(q).map_err(|e| e.to_string())?;
        ensure(sum.is_of_order_type(sigma), || {
            format!("{p} + {q} = {sum} leaves Λ_B{sigma}")
        })
    })
}

fn check_double_interlacing_witness(n: usize, m: u32) -> Outcome {
    let gammas = DominantWeight::enumerate(n, m);
    let mut shapes = SkewShape::enumerate(n, m);
    shapes.sort_by_key(|p| (shape_size(p), p.clone()));
    scan(shapes, |p| {
        let witness = gammas.iter().any(|g| between(p, g));
        ensure(witness == p.in_branching_semigroup(), || {
            format!(
                "{p}: double interlacing {} but witness {}",
                p.in_branching_semigroup(),
                witness
            )
        })
    })
}

fn check_h_sigma_round_trip(n: usize, m: u32) -> Outcome {
    let forward = OrderType::all(n)
        .into_iter()
        .flat_map(|sigma| typed_shapes(&sigma, m).into_iter().map(move |p| (sigma.clone(), p)));
    let first = scan(forward, |(sigma, p)| {
        let z = h_sigma(sigma, p).map_err(|e| e.to_string())?;
        let back = h_sigma_inverse(sigma, &z).map_err(|e| e.to_string())?;
        ensure(&back == p, || format!("σ={sigma}: {p} -> {z} -> {back}"))
    });
    if first.counterexample.is_some() {
        return first;
    }
    let backward = OrderType::all(n).into_iter().flat_map(|sigma| {
        rearrangements_ending_in_zero(n, m)
            .into_iter()
            .map(move |z| (sigma.clone(), z))
    });
    let second = scan(backward, |(sigma, z)| {
        let p = h_sigma_inverse(sigma, z).map_err(|e| e.to_string())?;
        let again = h_sigma(sigma, &p).map_err(|e| format!("σ={sigma}: {z} -> {p}: {e}"))?;
        ensure(&again == z, || format!("σ={sigma}: {z} -> {p} -> {again}"))
    });
    Outcome {
        cases: first.cases + second.cases,
        counterexample: second.counterexample,
    }
}

fn check_h_sigma_additive(n: usize, m: u32) -> Outcome {
    let cases = OrderType::all(n).into_iter().flat_map(|sigma| {
        let shapes = typed_shapes(&sigma, m);
        let pairs: Vec<_> = shapes
            .iter()
            .flat_map(|p| shapes.iter().map(move |q| (p.clone(), q.clone())))
            .collect();
        pairs.into_iter().map(move |(p, q)| (sigma.clone(), p, q))
    });
    scan(cases, |(sigma, p, q)| {
        let sum = p.add(q).map_err(|e| e.to_string())?;
        let lhs = h_sigma(sigma, &sum).map_err(|e| e.to_string())?;
        let rhs = h_sigma(sigma, p)
            .and_then(|a| a.add(&h_sigma(sigma, q)?))
            .map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("σ={sigma}: h({p} + {q}) = {lhs} != {rhs}"))
    })
}

fn check_interlacing_window(n: usize, m: u32) -> Outcome {
    let gammas = DominantWeight::enumerate(n, m);
    scan(branching_shapes(n, m), |p| {
        let z = h(p).map_err(|e| e.to_string())?;
        for g in &gammas {
            let window = g
                .entries()
                .iter()
                .enumerate()
                .all(|(k, &v)| z.y(k + 1) <= v && v <= z.x(k + 1));
            ensure(window == between(p, g), || format!("{p}, γ={g}: window {window}"))?;
        }
        Ok(())
    })
}

fn check_peeling_split(n: usize, m: u32) -> Outcome {
    let cases = OrderType::all(n).into_iter().flat_map(|sigma| {
        let shapes = typed_shapes(&sigma, m);
        let pairs: Vec<_> = shapes
            .iter()
            .enumerate()
            .flat_map(|(i, p)| shapes[i..].iter().map(move |q| (p.clone(), q.clone())))
            .collect();
        pairs
    });
    scan(cases, |(p, q)| {
        let sum = p.add(q).map_err(|e| e.to_string())?;
        for gamma in crate::gzbasis::enumerate_intermediate(&sum).map_err(|e| e.to_string())? {
            let (nu, nu2) = peeling_split(p, q, &gamma).map_err(|e| format!("{p} + {q}, γ={gamma}: {e}"))?;
            ensure(
                nu.add(&nu2).ok() == Some(gamma.clone()) && between(p, &nu) && between(q, &nu2),
                || format!("{p} + {q}, γ={gamma}: bad split {nu} + {nu2}"),
            )?;
        }
        Ok(())
    })
}

// --- decomp ----------------------------------------------------------------

fn check_fundamental_round_trip(n: usize, m: u32) -> Outcome {
    scan(rearrangements_ending_in_zero(n, m), |z| {
        let c = to_fundamental(z);
        let back = from_fundamental(&c).map_err(|e| e.to_string())?;
        ensure(&back == z, || format!("{z} -> {c:?} -> {back}"))
    })
}

fn check_filtration(n: usize, m: u32) -> Outcome {
    let cases = OrderType::all(n)
        .into_iter()
        .flat_map(|sigma| (1..=m.max(1)).map(move |level| (sigma.clone(), level)));
    scan(cases, |(sigma, level)| {
        let upper: HashSet<SkewShape> = enumerate_filtration(sigma, *level).into_iter().collect();
        let lower = enumerate_filtration(sigma, level - 1);
        ensure(lower.iter().all(|p| upper.contains(p)), || {
            format!("σ={sigma}: level {} ⊄ level {level}", level - 1)
        })?;
        ensure(
            upper.iter().all(|p| p.is_of_order_type(sigma) && p_max(p) <= *level),
            || format!("σ={sigma}: level {level} lists a foreign shape"),
        )
    })
}

fn top_level_cases(n: usize, m: u32) -> impl Iterator<Item = (OrderType, SkewShape)> {
    OrderType::all(n).into_iter().flat_map(move |sigma| {
        typed_shapes(&sigma, m)
            .into_iter()
            .filter(|p| p_max(p) > 1)
            .map(move |p| (sigma.clone(), p))
    })
}

fn check_peel(n: usize, m: u32) -> Outcome {
    scan(top_level_cases(n, m), |(sigma, p)| {
        let level = p_max(p);
        let z = h_sigma(sigma, p).map_err(|e| e.to_string())?;
        for tau in p.order_types().map_err(|e| e.to_string())? {
            let (a, b) = peel(sigma, p, Some(&tau)).map_err(|e| format!("σ={sigma} τ={tau} {p}: {e}"))?;
            ensure(a.add(&b).ok().as_ref() == Some(p), || {
                format!("σ={sigma} {p}: {a} + {b} != p")
            })?;
            for part in [&a, &b] {
                ensure(
                    part.is_of_order_type(sigma) && part.is_of_order_type(&tau) && p_max(part) < level,
                    || format!("σ={sigma} τ={tau} {p}: part {part} outside Λ_B(σ,m−1) ∩ Λ_B(τ,m−1)"),
                )?;
            }
            for (i, (s, t)) in sigma.letters().iter().zip(tau.letters()).enumerate() {
                if s != t {
                    let e = z.entries();
                    ensure(e[2 * i + 1] == e[2 * i + 2], || {
                        format!("σ={sigma} τ={tau} {p}: tie not visible in {z}")
                    })?;
                }
            }
        }
        Ok(())
    })
}

fn check_megapeel(n: usize, m: u32) -> Outcome {
    scan(top_level_cases(n, m), |(sigma, p)| {
        let level = p_max(p);
        let z = h_sigma(sigma, p).map_err(|e| e.to_string())?;
        let xis = megapeel_vectors(&z);
        let total = xis
            .iter()
            .try_fold(Rearrangement::zero(n), |acc, x| acc.add(x))
            .map_err(|e| e.to_string())?;
        ensure(total == z, || format!("σ={sigma} {p}: Σξ = {total} != {z}"))?;

        let res = megapeel(sigma, p).map_err(|e| e.to_string())?;
        let sum = res
            .parts
            .iter()
            .try_fold(SkewShape::zero(n), |acc, q| acc.add(q))
            .map_err(|e| e.to_string())?;
        ensure(&sum == p, || format!("σ={sigma} {p}: parts sum to {sum}"))?;
        let modules: Vec<LModule> = res
            .parts
            .iter()
            .map(l_module)
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for q in &res.parts {
            ensure(q.is_of_order_type(sigma) && p_max(q) < level, || {
                format!("σ={sigma} {p}: part {q} outside Λ_B(σ,m−1)")
            })?;
        }
        ensure(modules.iter().all(LModule::is_sl2_irreducible), || {
            format!("σ={sigma} {p}: reducible part")
        })?;
        let rp = r(p).map_err(|e| e.to_string())?;
        match res.case {
            MegapeelCase::TensorSplit => {
                for (i, module) in modules.iter().enumerate() {
                    let expected: Vec<u32> = (0..n).map(|j| if j == i { rp[i] } else { 0 }).collect();
                    ensure(module.factors() == expected.as_slice(), || {
                        format!("σ={sigma} {p}: part {i} has r = {:?}", module.factors())
                    })?;
                }
                let dim: u64 = modules.iter().map(LModule::dimension).product();
                ensure(dim == l_module(p).map_err(|e| e.to_string())?.dimension(), || {
                    format!("σ={sigma} {p}: dimension")
                })
            }
            MegapeelCase::CartanProjection => {
                ensure(is_cartan_shape(&z, level), || {
                    format!("σ={sigma} {p}: cartan case with h = {z}")
                })?;
                ensure(LModule::new(rp).is_sl2_irreducible(), || {
                    format!("σ={sigma} {p}: A^p reducible")
                })
            }
        }
    })
}

fn check_cubic(n: usize, m: u32) -> Outcome {
    let cases = OrderType::all(n).into_iter().flat_map(|sigma| {
        let shapes = typed_shapes(&sigma, m);
        let mut by_sum: HashMap<SkewShape, Vec<(SkewShape, SkewShape)>> = HashMap::new();
        for a in &shapes {
            for b in &shapes {
                by_sum
                    .entry(a.add(b).expect("same rank"))
                    .or_default()
                    .push((a.clone(), b.clone()));
            }
        }
        let mut sums: Vec<_> = by_sum.into_iter().collect();
        sums.sort_by_key(|(s, _)| (shape_size(s), s.clone()));
        let quads: Vec<_> = sums
            .into_iter()
            .flat_map(|(_, pairs)| {
                let pairs2 = pairs.clone();
                pairs.into_iter().flat_map(move |(pa, pb)| {
                    pairs2
                        .clone()
                        .into_iter()
                        .map(move |(qa, qb)| (pa.clone(), pb.clone(), qa, qb))
                })
            })
            .collect();
        quads.into_iter().map(move |q| (sigma.clone(), q))
    });
    scan(cases, |(sigma, (pa, pb, qa, qb))| {
        let c = cubic_split(sigma, pa, pb, qa, qb).map_err(|e| format!("σ={sigma} {pa},{pb},{qa},{qb}: {e}"))?;
        let add = |x: &SkewShape, y: &SkewShape| x.add(y).ok();
        ensure(
            add(&c.t_prime, &c.r_prime).as_ref() == Some(pa)
                && add(&c.t_double, &c.r_double).as_ref() == Some(pb)
                && add(&c.r_prime, &c.r_double).as_ref() == Some(qa)
                && add(&c.t_prime, &c.t_double).as_ref() == Some(qb),
            || format!("σ={sigma} {pa},{pb},{qa},{qb}: equations fail for {c:?}"),
        )?;
        let level = [pa, pb, qa, qb].iter().map(|s| p_max(s)).max().unwrap_or(0);
        for s in [&c.t_prime, &c.t_double, &c.r_prime, &c.r_double] {
            ensure(s.is_of_order_type(sigma) && p_max(s) <= level, || {
                format!("σ={sigma}: {s} outside Λ_B(σ,m)")
            })?;
        }
        let n1 = to_fundamental(&h_sigma(sigma, pa).map_err(|e| e.to_string())?);
        let m1 = to_fundamental(&h_sigma(sigma, qa).map_err(|e| e.to_string())?);
        let rho1 = to_fundamental(&h_sigma(sigma, &c.r_prime).map_err(|e| e.to_string())?);
        let expected: Vec<u32> = n1.coords().iter().zip(m1.coords()).map(|(a, b)| *a.min(b)).collect();
        ensure(rho1.coords() == expected.as_slice(), || {
            format!("σ={sigma}: ρ′ != min(n′, m′)")
        })
    })
}

// --- characters ------------------------------------------------------------

fn check_dimension_law(n: usize, m: u32) -> Outcome {
    let gammas = DominantWeight::enumerate(n, m);
    scan(branching_shapes(n, m), |p| {
        let count = gammas.iter().filter(|g| between(p, g)).count() as u64;
        let dim = l_module(p).map_err(|e| e.to_string())?.dimension();
        ensure(count == dim, || format!("{p}: ∏(r_i+1) = {dim}, brute count {count}"))
    })
}

fn check_basis_weights(n: usize, m: u32) -> Outcome {
    scan(branching_shapes(n, m), |p| {
        let basis = basis_of(p).map_err(|e| e.to_string())?;
        let mut got: Vec<Vec<i64>> = basis.iter().map(|b| b.weight.clone()).collect();
        let mut want = l_module(p).map_err(|e| e.to_string())?.weights();
        got.sort();
        want.sort();
        ensure(got == want, || format!("{p}: basis weights differ from ⊗F^r weights"))?;
        ensure(got.windows(2).all(|w| w[0] != w[1]), || format!("{p}: repeated weight"))
    })
}

fn check_character_consistency(n: usize, m: u32) -> Outcome {
    let mut factors = vec![Vec::new()];
    for _ in 0..n {
        factors = factors
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=m).map(move |v| {
                    let mut w = prefix.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
    }
    scan(factors, |rs| {
        let module = LModule::new(rs.clone());
        let d = restrict_to_diagonal(&module);
        ensure(d.character() == module.diagonal_character(), || {
            format!("r={rs:?}: character mismatch")
        })
    })
}

fn check_gl_identity(n: usize, m: u32) -> Outcome {
    let mut ws = DominantWeight::enumerate(n, m);
    ws.reverse();
    scan(ws, |l| {
        ensure(verify_gl_branching_identity(l, n), || {
            format!("GL identity fails at λ={l}")
        })
    })
}

fn check_sp_identity(n: usize, m: u32) -> Outcome {
    if n < 2 {
        return Outcome {
            cases: 0,
            counterexample: None,
        };
    }
    let mut ws = DominantWeight::enumerate(n, m);
    ws.reverse();
    scan(ws, |l| {
        ensure(verify_sp_branching_identity(l, n), || {
            format!("Sp identity fails at λ={l}")
        })
    })
}

fn check_schur_branching(n: usize, m: u32) -> Outcome {
    let mut ws = DominantWeight::enumerate(n, m);
    ws.reverse();
    scan(ws, |l| {
        ensure(verify_schur_branching(l), || format!("Schur branching fails at λ={l}"))
    })
}

fn checks(suite: Suite) -> Vec<(&'static str, CheckFn)> {
    let semigroup: Vec<(&'static str, CheckFn)> = vec![
        ("order_types_nonempty", check_order_types_nonempty),
        ("semigroup_closure", check_closure),
        ("double_interlacing_witness", check_double_interlacing_witness),
        ("h_sigma_round_trip", check_h_sigma_round_trip),
        ("h_sigma_additive", check_h_sigma_additive),
        ("interlacing_window", check_interlacing_window),
        ("peeling_split", check_peeling_split),
    ];
    let decomp: Vec<(&'static str, CheckFn)> = vec![
        ("fundamental_round_trip", check_fundamental_round_trip),
        ("filtration", check_filtration),
        ("peel", check_peel),
        ("megapeel", check_megapeel),
        ("cubic_split", check_cubic),
    ];
    let characters: Vec<(&'static str, CheckFn)> = vec![
        ("dimension_law", check_dimension_law),
        ("basis_weights", check_basis_weights),
        ("character_consistency", check_character_consistency),
        ("schur_branching", check_schur_branching),
        ("gl_identity", check_gl_identity),
        ("sp_identity", check_sp_identity),
    ];
    match suite {
        Suite::Semigroup => semigroup,
        Suite::Decomp => decomp,
        Suite::Characters => characters,
        Suite::All => semigroup.into_iter().chain(decomp).chain(characters).collect(),
    }
}

pub fn run_suite(suite: Suite, config: SweepConfig) -> SweepReport {
    let cells: Vec<(&'static str, CheckFn, usize)> = checks(suite)
        .into_iter()
        .flat_map(|(name, f)| (1..=config.max_rank).map(move |n| (name, f, n)))
        .collect();
    let run = || -> Vec<CheckOutcome> {
        cells
            .par_iter()
            .map(|&(check, f, rank)| {
                let out = f(rank, config.max_entry);
                CheckOutcome {
                    check,
                    rank,
                    cases: out.cases,
                    counterexample: out.counterexample,
                }
            })
            .collect()
    };
    let outcomes = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    };
    SweepReport { outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_small_ranges() {
        let report = run_suite(
            Suite::All,
            SweepConfig {
                max_rank: 2,
                max_entry: 2,
                threads: Some(2),
            },
        );
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(report.outcomes.iter().any(|o| o.check == "cubic_split" && o.cases > 0));
    }

    #[test]
    fn rank_one_is_degenerate_but_ok() {
        let report = run_suite(
            Suite::All,
            SweepConfig {
                max_rank: 1,
                max_entry: 3,
                threads: None,
            },
        );
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("decomp".parse::<Suite>().unwrap(), Suite::Decomp);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Suite::Characters.to_string(), "characters");
    }

    #[test]
    fn scan_reports_first_failure() {
        let out = scan(0..10, |&i| ensure(i < 4, || format!("i={i}")));
        assert_eq!(out.cases, 5);
        assert_eq!(out.counterexample.as_deref(), Some("i=4"));
    }
}
