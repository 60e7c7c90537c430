//! Acceptance run: one pass/fail line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::{Command, ExitCode};

use jacsyz_core::bourbaki::{bourbaki_map, pair_dimension};
use jacsyz_core::invariants::ring_dimension;
use jacsyz_core::{
    analyze_text, audit, corpus, oracle, parse_poly, AnalysisError, AnalysisOptions,
    CurveAnalysis, CurveMeta, Ideal, Nu2Shape, Poly, Status, Verdict,
};
use rayon::prelude::*;

type Checked = Result<(), String>;
type Curves = BTreeMap<String, CurveAnalysis>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Checked + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Checked {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Checked {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn p(text: &str) -> Poly {
    parse_poly(text).expect("valid polynomial")
}

fn triple(a: &str, b: &str, c: &str) -> [Poly; 3] {
    [p(a), p(b), p(c)]
}

fn is_syzygy(f: &Poly, r: &[Poly; 3]) -> bool {
    let g = f.gradient();
    (0..3)
        .fold(Poly::zero(), |acc, i| &acc + &(&r[i] * &g[i]))
        .is_zero()
}

/// `a` and `b` are proportional: all 2x2 minors vanish.
fn proportional(a: &[Poly], b: &[Poly]) -> bool {
    let some_nonzero = a.iter().any(|x| !x.is_zero()) && b.iter().any(|x| !x.is_zero());
    some_nonzero
        && (0..a.len()).all(|i| (0..a.len()).all(|j| (&(&a[i] * &b[j]) - &(&a[j] * &b[i])).is_zero()))
}

fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    a.contains_ideal(b) && b.contains_ideal(a)
}

fn get<'a>(curves: &'a Curves, name: &str) -> Result<&'a CurveAnalysis, String> {
    curves.get(name).ok_or_else(|| format!("{name}: not analyzed"))
}

fn passes(a: &CurveAnalysis, id: &str) -> Checked {
    let report = audit(a);
    let check = report.get(id).ok_or_else(|| format!("{id} missing"))?;
    ensure(check.status == Status::Pass, || {
        format!("{}: {id} is {} ({})", a.name, check.status, check.details)
    })
}

fn not_failed(a: &CurveAnalysis, id: &str) -> Checked {
    let report = audit(a);
    let check = report.get(id).ok_or_else(|| format!("{id} missing"))?;
    ensure(check.status != Status::Fail, || {
        format!("{}: {id} failed ({})", a.name, check.details)
    })
}

/// `τ` from the exponents of a 3-syzygy curve.
fn tau_from_exponents(d: i64, ds: &[u32]) -> i64 {
    let (d1, d2, d3) = (ds[0] as i64, ds[1] as i64, ds[2] as i64);
    (d - 1) * (d1 + d2 + d3) - (d1 * d2 + d1 * d3 + d2 * d3)
}

fn c1(curves: &Curves) -> Checked {
    let a = get(curves, "ex1-heptic")?;
    eq("exponents", a.exponents(), &[4, 4, 4])?;
    eq("tau", a.invariants.tau, 24)?;
    ensure(!a.classification.is_plus_one, || "classified plus-one".into())?;
    eq("d1 + d2", a.exponents()[0] + a.exponents()[1], 8)
}

fn c2(curves: &Curves) -> Checked {
    let cases: [(&str, &[u32], u64); 5] = [
        ("exlowdegree-i", &[2, 2, 3], 5),
        ("exlowdegree-ii", &[2, 2, 3], 5),
        ("exlowdegree-iii", &[2, 2, 3], 5),
        ("exlowdegree-iv", &[2, 4, 4], 8),
        ("exlowdegree-v", &[4, 5, 5], 5),
    ];
    for (name, exps, tau) in cases {
        let a = get(curves, name)?;
        eq(name, a.exponents(), exps)?;
        eq(name, a.invariants.tau, tau)?;
        eq(name, tau_from_exponents(a.d() as i64, a.exponents()), tau as i64)?;
        passes(a, "CHK-propA")?;
    }
    Ok(())
}

fn c3(curves: &Curves) -> Checked {
    let a = get(curves, "exconj1-sextic")?;
    let f = a.curve.f();
    eq("exponents", a.exponents(), &[3, 4, 4, 4])?;
    let shifted: Vec<u32> = a.exponents().iter().map(|e| e + a.d() - 1).collect();
    eq("first syzygy twists", shifted, vec![8, 9, 9, 9])?;
    eq("second syzygy twists", a.resolution.e_list.clone(), vec![10, 10])?;
    eq("tau", a.invariants.tau, 16)?;
    eq("nu", a.invariants.nu, 3)?;

    let r1 = triple("-xy^2", "x^2y", "-x^2z+y^2z");
    let r2 = triple("-3y^4", "3xy^3-4xyz^2", "-3x^3z-9xy^2z+4xz^3");
    let r3 = triple("-3x^3y+4xyz^2", "3x^4", "9x^2yz+3y^3z-4yz^3");
    let r4 = triple("4xy^2z", "0", "3x^4+6x^2y^2+3y^4-4y^2z^2");
    for (i, r) in [&r1, &r2, &r3, &r4].into_iter().enumerate() {
        ensure(is_syzygy(f, r), || format!("stated r_{} is not a syzygy", i + 1))?;
    }
    ensure(proportional(&r1, &a.resolution.syzygies.generators[0]), || {
        "computed r_1 differs from the stated one".into()
    })?;
    let g: Vec<Poly> = [&r2, &r3, &r4]
        .iter()
        .map(|r| bourbaki_map(r, &r1, f).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let want = [p("-3yz"), p("3xz"), p("3xy")];
    for (j, (got, want)) in g.iter().zip(&want).enumerate() {
        ensure(proportional(std::slice::from_ref(got), std::slice::from_ref(want)), || {
            format!("g_{} = {got:?}", j + 2)
        })?;
    }
    let b = a.bourbaki.as_ref().ok_or("no Bourbaki data")?;
    ensure(same_ideal(&b.data.ideal, &Ideal::new(&want)), || {
        "computed B is not (xy, xz, yz)".into()
    })?;
    eq("deg B", b.data.degree, 3)?;
    // g_2, g_3 share z; r_3 + r_4 separates them
    ensure(pair_dimension(&g[0], &g[1]) == 2, || "g_2, g_3 coprime".into())?;
    let r3b: [Poly; 3] = std::array::from_fn(|i| &r3[i] + &r4[i]);
    let g3b = bourbaki_map(&r3b, &r1, f).map_err(|e| e.to_string())?;
    ensure(pair_dimension(&g[0], &g3b) == 1, || "g_2, g_3' not coprime".into())?;
    eq("d'", b.d_prime.as_ref().map(|d| d.d_prime), Some(4))
}

fn c4(curves: &Curves) -> Checked {
    for (name, tau) in [("A5", 10), ("A7", 25), ("C''5", 10)] {
        let a = get(curves, name)?;
        let d1 = a.exponents()[0];
        ensure(matches!(a.classification.verdict, Verdict::MSyzygy { m: 4, .. }), || {
            format!("{name}: {}", a.classification.verdict)
        })?;
        ensure(a.exponents().iter().all(|&e| e == d1), || format!("{name}: unequal exponents"))?;
        eq(name, a.d(), 2 * d1 - 1)?;
        eq(name, a.invariants.tau as i64, 3 * (d1 * d1) as i64 - 6 * d1 as i64 + 1)?;
        eq(name, a.invariants.tau, tau)?;
        eq(name, a.classification.nu2_shape, Nu2Shape::II)?;
    }
    let b7 = get(curves, "B7")?;
    eq(
        "B7",
        &b7.classification.verdict,
        &Verdict::PlusOneGenerated { d1: 3, d2: 4, d3: 5 },
    )?;
    eq("B7 tau", b7.invariants.tau, 25)?;
    eq("B7 nu", b7.invariants.nu, 2)?;
    let a7 = get(curves, "A7")?;
    eq(
        "(tau, nu)",
        (a7.invariants.tau, a7.invariants.nu),
        (b7.invariants.tau, b7.invariants.nu),
    )?;
    ensure(a7.classification.verdict != b7.classification.verdict, || {
        "A7 and B7 share a verdict".into()
    })
}

fn c5(curves: &Curves) -> Checked {
    for k in [2u32, 3] {
        let a = get(curves, &format!("ex2-k{k}"))?;
        let d = a.d();
        eq("d", d, 2 * k + 1)?;
        eq("exponents", a.exponents(), &[2, d - 2, d - 1])?;
        eq("tau", a.invariants.tau, (d * d - 4 * d + 5) as u64)?;
        eq("sigma", a.invariants.sigma, Some(d - 2))?;
        eq("nu", a.invariants.nu, 2)?;
        let n = &a.invariants.jacobian_module;
        eq("n_(d-2)", n[(d - 2) as usize], 1)?;
        eq("n_(2d-4)", n[(2 * d - 4) as usize], 1)?;
    }
    Ok(())
}

fn c6(curves: &Curves) -> Checked {
    let a = get(curves, "exnularge-3")?;
    eq("exponents", a.exponents(), &[3, 4, 6])?;
    eq("nu", a.invariants.nu, 3)?;
    let r1 = triple("0", "x^3+y^3", "-6y^2z");
    ensure(is_syzygy(a.curve.f(), &r1), || "stated r_1 is not a syzygy".into())?;
    eq("dim AR_3", a.resolution.ar_dimension(3), 1)?;
    ensure(proportional(&r1, &a.resolution.syzygies.generators[0]), || {
        "stated r_1 is not a multiple of the computed one".into()
    })
}

fn c7(curves: &Curves) -> Checked {
    for d in 4..=6u32 {
        let name = format!("exconj-i-d{d}");
        let a = get(curves, &name)?;
        let ds = a.exponents();
        ensure(a.classification.minimal_tjurina && a.dpw.equality, || {
            format!("{name}: not minimal Tjurina")
        })?;
        eq(&name, a.invariants.tau as i64, ((d - 1) * (d - ds[0] - 1)) as i64)?;
        eq(&name, (ds[1], ds[2]), (d - 1, d - 1))?;
        passes(a, "CHK-thmNEW")?;
    }
    for (d, key) in [(3u32, "free"), (4, "plus_one_generated"), (5, "three_syzygy")] {
        let name = format!("exconj-ii-d{d}");
        let a = get(curves, &name)?;
        eq(&name, a.classification.verdict.key(), key)?;
        eq(&name, a.invariants.tau, 2 * d as u64 - 3)?;
    }
    let a = get(curves, "exconj-iii")?;
    eq("m", a.m(), 4)?;
    eq("exponents", a.exponents(), &[3, 4, 4, 4])?;
    eq("tau", a.invariants.tau, 6)?;
    let f = a.curve.f();
    let r1 = triple("0", "-2y^2z-3xz^2", "3xy^2+2yz^2");
    let r2 = triple("-6xy^3+6xz^3", "10x^3y+4y^4+yz^3", "-10x^3z-y^3z-4z^4");
    let r3 = triple("-3x^2y^2-2xyz^2", "5x^4+2xy^3+y^2z^2+2xz^3", "0");
    for r in [&r1, &r2, &r3] {
        ensure(is_syzygy(f, r), || "stated syzygy fails".into())?;
    }
    let g2 = bourbaki_map(&r2, &r1, f).map_err(|e| e.to_string())?;
    let g3 = bourbaki_map(&r3, &r1, f).map_err(|e| e.to_string())?;
    ensure(proportional(std::slice::from_ref(&g2), &[p("y^3-z^3")]), || format!("g_2 = {g2:?}"))?;
    ensure(g3.div_exact(&p("3xy+2z^2")).is_some(), || {
        format!("3xy+2z^2 does not divide g_3 = {g3:?}")
    })?;
    let b_prime = Ideal::new(&[g2.clone(), g3.clone()]);
    eq("dim S/B'", b_prime.krull_dimension(), 1)?;
    let deg_b_prime = b_prime.hilbert_series().multiplicity();
    eq("deg B'", deg_b_prime, 9)?;
    let b = a.bourbaki.as_ref().ok_or("no Bourbaki data")?;
    eq("deg B", b.data.degree, 7)?;
    ensure(deg_b_prime as u64 != b.data.degree, || "deg B' = deg B".into())
}

fn c8(curves: &Curves) -> Checked {
    // (name, d, number of lines)
    for (name, d, m) in [("ts-2-2", 4u32, 2u32), ("ts-2-2-1", 5, 3)] {
        let a = get(curves, name)?;
        let inv = &a.invariants;
        eq(name, a.d(), d)?;
        eq(name, a.exponents(), &[m - 1, d - 1, d - 1])?;
        eq(name, inv.tau, ((d - 1) * (d - m)) as u64)?;
        eq(name, inv.nu, ((m - 1) * (m - 1)) as u64)?;
        eq(name, inv.ct, d + m - 3)?;
        eq(name, inv.st, 2 * d + m - 5)?;
    }
    Ok(())
}

fn c9(curves: &Curves) -> Checked {
    for a in curves.values() {
        let inv = &a.invariants;
        let t = 3 * a.d() as usize - 6;
        let n = &inv.jacobian_module;
        ensure((0..=t).all(|k| n[k] == n[t - k]), || format!("{}: duality", a.name))?;
        let peak = (0..=t).max_by_key(|&k| (n[k], std::cmp::Reverse(k))).unwrap_or(0);
        ensure(
            (0..peak).all(|k| n[k] <= n[k + 1]) && (peak..t).all(|k| n[k] >= n[k + 1]),
            || format!("{}: not unimodal {n:?}", a.name),
        )?;
        if a.m() >= 2 && inv.tau > 0 {
            let eps = a.resolution.epsilons();
            let ds = a.exponents();
            ensure(eps.iter().all(|&e| e >= 1), || format!("{}: eps {eps:?}", a.name))?;
            eq(
                &format!("{}: sum eps", a.name),
                eps.iter().sum::<i64>(),
                ds[0] as i64 + ds[1] as i64 - (a.d() as i64 - 1),
            )?;
        }
        // tau from the resolution: m(f)_k is eventually tau
        let d = a.d() as i64;
        let k = 4 * d;
        let mut m_k = ring_dimension(k) - 3 * ring_dimension(k - d + 1);
        m_k += a.exponents().iter().map(|&dj| ring_dimension(k + 1 - d - dj as i64)).sum::<i64>();
        m_k -= a.resolution.e_list.iter().map(|&e| ring_dimension(k - e as i64)).sum::<i64>();
        eq(&format!("{}: tau from resolution", a.name), m_k, inv.tau as i64)?;

        for id in ["CHK-tau1", "CHK-thmd3", "CHK-dual", "CHK-unimodal", "CHK-eps"] {
            not_failed(a, id)?;
        }
        if a.meta.all_components_rational.is_some() {
            not_failed(a, "CHK-corB1")?;
        }
        if inv.nu == 2 {
            passes(a, "CHK-thmPO2")?;
        }
        if a.classification.is_plus_one {
            passes(a, "CHK-corHS-pattern")?;
        }
        if a.m() == 3 {
            passes(a, "CHK-corA")?;
            passes(a, "CHK-rkcoeff")?;
        }
        let report = audit(a);
        ensure(report.passed(), || {
            let ids: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
            format!("{}: {ids:?}", a.name)
        })?;
    }
    Ok(())
}

fn c10(curves: &Curves) -> Checked {
    let small: Vec<&CurveAnalysis> = curves.values().filter(|a| a.d() <= 6).collect();
    let diffs: Vec<String> = small
        .par_iter()
        .flat_map(|a| {
            oracle::compare(a, 3 * a.d() - 4)
                .into_iter()
                .map(|m| format!("{}: {m}", a.name))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(small.len() >= 15, || format!("only {} curves of degree <= 6", small.len()))?;
    ensure(diffs.is_empty(), || diffs.join("; "))
}

fn c11() -> Checked {
    let opts = AnalysisOptions::default();
    for text in ["(x+y+z)^2(x^3+y^3+z^3)", "x^2yz^2", "(x^2+y^2+z^2)^2"] {
        match analyze_text("bad", text, CurveMeta::default(), &opts) {
            Err(AnalysisError::NotReduced(_)) => {}
            other => return Err(format!("{text}: {:?}", other.map(|a| a.invariants.tau))),
        }
    }
    let mut file = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    let json = r#"[{"name": "ts", "f_text": "x^2y^2+z^4", "expected": {"tau": 7}}]"#;
    file.write_all(json.as_bytes()).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_jacsyz"))
        .args(["analyze", "--input", file.path().to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    eq("exit code", out.status.code(), Some(2))
}

fn main() -> ExitCode {
    let opts = AnalysisOptions::default();
    let records: Vec<_> = corpus().into_iter().filter(|r| !r.slow).collect();
    let analyzed: Vec<_> = records
        .par_iter()
        .map(|r| (r.name.clone(), analyze_text(&r.name, &r.f_text, r.meta.clone(), &opts)))
        .collect();
    let mut curves = Curves::new();
    let mut load_errors = Vec::new();
    for (name, res) in analyzed {
        match res {
            Ok(a) => {
                curves.insert(name, a);
            }
            Err(e) => load_errors.push(format!("{name}: {e}")),
        }
    }

    let criteria: [Criterion; 11] = [
        ("ex1 arrangement", Box::new(|| c1(&curves))),
        ("low degree suite", Box::new(|| c2(&curves))),
        ("sextic with four syzygies", Box::new(|| c3(&curves))),
        ("nu = 2 shapes", Box::new(|| c4(&curves))),
        ("ex2 family", Box::new(|| c5(&curves))),
        ("large nu", Box::new(|| c6(&curves))),
        ("smooth curve plus a line", Box::new(|| c7(&curves))),
        ("Thom-Sebastiani", Box::new(|| c8(&curves))),
        ("property suites", Box::new(|| c9(&curves))),
        ("oracle equivalence", Box::new(|| c10(&curves))),
        ("negative controls", Box::new(c11)),
    ];
    let mut failed = 0;
    if !load_errors.is_empty() {
        println!("corpus: FAIL ({})", load_errors.join("; "));
        failed += 1;
    }
    for (i, (label, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} {label}: PASS", i + 1),
            Err(e) => {
                println!("criterion {:>2} {label}: FAIL ({e})", i + 1);
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
