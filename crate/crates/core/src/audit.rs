//! Mechanical checks of the structural theorems on one analyzed curve.
//!
//! Every check reads only the `CurveAnalysis`, so a tampered analysis is
//! caught the same way a wrong computation would be.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analysis::CurveAnalysis;
use crate::classify::{dpw_bound, Nu2Shape, Verdict};
use crate::groebner::ModVec;
use crate::invariants::ring_dimension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditCheck {
    pub id: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn failures(&self) -> impl Iterator<Item = &AuditCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, id: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Every check identifier, in report order.
pub const CHECK_IDS: &[&str] = &[
    "CHK-euler",
    "CHK-koszul",
    "CHK-bounds",
    "CHK-thmd3",
    "CHK-eps",
    "CHK-classify",
    "CHK-propA",
    "CHK-eq1",
    "CHK-dual",
    "CHK-unimodal",
    "CHK-sigma",
    "CHK-thmHS-sigma",
    "CHK-propC",
    "CHK-corHS-pattern",
    "CHK-thmPO2",
    "CHK-dPW",
    "CHK-tau1",
    "CHK-B3",
    "CHK-propD",
    "CHK-propB",
    "CHK-corBour",
    "CHK-thmNEW",
    "CHK-corA",
    "CHK-rkcoeff",
    "CHK-corB1",
    "CHK-corB2",
    "CHK-thm2",
    "CHK-thm3",
];

enum Outcome {
    Items(Vec<(bool, String)>),
    Skip(String),
}

fn skip(reason: impl Into<String>) -> Outcome {
    Outcome::Skip(reason.into())
}

/// Collects named assertions; the details of a failed check list only
/// the assertions that failed.
#[derive(Default)]
struct Items(Vec<(bool, String)>);

impl Items {
    fn eq<T: PartialEq + fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        let msg = if ok {
            format!("{what} = {got:?}")
        } else {
            format!("{what} = {got:?}, expected {want:?}")
        };
        self.0.push((ok, msg));
    }

    fn holds(&mut self, ok: bool, msg: impl Into<String>) {
        self.0.push((ok, msg.into()));
    }

    fn done(self) -> Outcome {
        Outcome::Items(self.0)
    }
}

struct Ctx<'a> {
    a: &'a CurveAnalysis,
    d: i64,
    ds: Vec<i64>,
    m: usize,
    tau: i64,
    t: i64,
}

impl Ctx<'_> {
    fn singular(&self) -> bool {
        self.tau > 0
    }

    fn n(&self, k: i64) -> i64 {
        if k < 0 {
            return 0;
        }
        self.a
            .invariants
            .jacobian_module
            .get(k as usize)
            .map_or(0, |&v| v as i64)
    }
}

pub fn audit(a: &CurveAnalysis) -> AuditReport {
    let ctx = Ctx {
        a,
        d: a.d() as i64,
        ds: a.exponents().iter().map(|&x| x as i64).collect(),
        m: a.m(),
        tau: a.invariants.tau as i64,
        t: a.invariants.t as i64,
    };
    let checks = CHECK_IDS
        .iter()
        .map(|&id| {
            let outcome = run(id, &ctx);
            let (status, details) = match outcome {
                Outcome::Skip(reason) => (Status::NotApplicable, reason),
                Outcome::Items(items) => {
                    if items.iter().all(|(ok, _)| *ok) {
                        let text: Vec<_> = items.into_iter().map(|(_, s)| s).collect();
                        (Status::Pass, text.join("; "))
                    } else {
                        let text: Vec<_> =
                            items.into_iter().filter(|(ok, _)| !ok).map(|(_, s)| s).collect();
                        (Status::Fail, text.join("; "))
                    }
                }
            };
            AuditCheck {
                id: id.to_string(),
                status,
                details,
            }
        })
        .collect();
    AuditReport { checks }
}

fn run(id: &str, c: &Ctx) -> Outcome {
    match id {
        "CHK-euler" => euler(c),
        "CHK-koszul" => koszul(c),
        "CHK-bounds" => bounds(c),
        "CHK-thmd3" => thmd3(c),
        "CHK-eps" => eps(c),
        "CHK-classify" => classify_check(c),
        "CHK-propA" => prop_a(c),
        "CHK-eq1" => eq1(c),
        "CHK-dual" => dual(c),
        "CHK-unimodal" => unimodal(c),
        "CHK-sigma" => sigma(c),
        "CHK-thmHS-sigma" => thm_hs_sigma(c),
        "CHK-propC" => prop_c(c),
        "CHK-corHS-pattern" => cor_hs_pattern(c),
        "CHK-thmPO2" => thm_po2(c),
        "CHK-dPW" => dpw(c),
        "CHK-tau1" => tau1(c),
        "CHK-B3" => b3(c),
        "CHK-propD" => prop_d(c),
        "CHK-propB" => prop_b(c),
        "CHK-corBour" => cor_bour(c),
        "CHK-thmNEW" => thm_new(c),
        "CHK-corA" => cor_a(c),
        "CHK-rkcoeff" => rkcoeff(c),
        "CHK-corB1" => cor_b1(c),
        "CHK-corB2" => cor_b2(c),
        "CHK-thm2" => thm2(c),
        "CHK-thm3" => thm3(c),
        _ => unreachable!("unknown check {id}"),
    }
}

fn euler(c: &Ctx) -> Outcome {
    let curve = &c.a.curve;
    let vars = [crate::poly::Poly::x(), crate::poly::Poly::y(), crate::poly::Poly::z()];
    let lhs = vars
        .iter()
        .zip(curve.gradient())
        .fold(crate::poly::Poly::zero(), |acc, (v, g)| &acc + &(v * g));
    let rhs = curve.f().scale(&crate::rat::Rat::from_int(c.d));
    let mut it = Items::default();
    it.holds(lhs == rhs, "x f_x + y f_y + z f_z = d f");
    it.done()
}

fn koszul(c: &Ctx) -> Outcome {
    let curve = &c.a.curve;
    let ar = &c.a.resolution.ar;
    let mut it = Items::default();
    for (k, name) in curve.koszul_syzygies().iter().zip(["k^x", "k^y", "k^z"]) {
        let v = ModVec::from_components(ar.module(), k);
        it.holds(ar.contains(&v), format!("{name} lies in AR(f)"));
    }
    it.done()
}

fn bounds(c: &Ctx) -> Outcome {
    let dm = *c.ds.last().unwrap();
    let m = c.m as i64;
    let mut it = Items::default();
    it.holds(dm <= 2 * c.d - 4, format!("d_m = {dm} <= 2d-4 = {}", 2 * c.d - 4));
    it.holds(m <= c.d + 1, format!("m = {m} <= d+1 = {}", c.d + 1));
    if c.a.meta.line_arrangement == Some(true) {
        it.holds(dm <= c.d - 2, format!("line arrangement: d_m = {dm} <= d-2"));
        it.holds(m < c.d, format!("line arrangement: m = {m} <= d-1"));
    }
    it.done()
}

fn thmd3(c: &Ctx) -> Outcome {
    if c.m < 3 {
        return skip("free curve");
    }
    let ds = &c.ds;
    let mut it = Items::default();
    it.holds(ds[0] + ds[1] >= c.d, format!("d_1 + d_2 = {} >= d", ds[0] + ds[1]));
    it.holds(ds[2] < c.d, format!("d_3 = {} <= d-1", ds[2]));
    it.done()
}

fn eps(c: &Ctx) -> Outcome {
    let eps = c.a.resolution.epsilons();
    let mut it = Items::default();
    it.holds(eps.iter().all(|&e| e >= 1), format!("epsilons {eps:?} >= 1"));
    it.eq(
        "sum of epsilons",
        eps.iter().sum::<i64>(),
        c.ds[0] + c.ds[1] - (c.d - 1),
    );
    it.done()
}

fn classify_check(c: &Ctx) -> Outcome {
    let cl = &c.a.classification;
    let ds = &c.ds;
    let sum = ds[0] + ds[1];
    let mut it = Items::default();
    it.eq("free iff d_1 + d_2 = d-1", c.m == 2, sum == c.d - 1);
    it.eq("plus-one iff d_1 + d_2 = d", cl.is_plus_one, sum == c.d);
    let nearly_free = matches!(cl.verdict, Verdict::NearlyFree { .. });
    it.eq(
        "nearly free iff 3-syzygy, d_2 = d_3, d_1 + d_2 = d",
        nearly_free,
        c.singular() && c.m == 3 && ds[1] == ds[2] && sum == c.d,
    );
    it.eq("smooth iff tau = 0", cl.verdict == Verdict::Smooth, c.tau == 0);
    if c.singular() {
        let nu = c.a.invariants.nu;
        it.eq("free iff nu = 0", matches!(cl.verdict, Verdict::Free { .. }), nu == 0);
        it.eq("nearly free iff nu = 1", nearly_free, nu == 1);
    }
    it.eq(
        "minimal Tjurina flag",
        cl.minimal_tjurina,
        c.tau == dpw_bound(c.d as u32, ds[0] as u32),
    );
    it.done()
}

fn prop_a(c: &Ctx) -> Outcome {
    if c.m != 3 {
        return skip("needs a 3-syzygy curve");
    }
    let (d, ds) = (c.d, &c.ds);
    let (d1, d2, d3) = (ds[0], ds[1], ds[2]);
    let inv = &c.a.invariants;
    let mut it = Items::default();
    it.eq("e", c.a.resolution.e_list[0] as i64, d1 + d2 + d3);
    if c.singular() {
        it.eq("ct", inv.ct as i64, d - 2 + d1);
    }
    it.eq("st", inv.st as i64, d1 + d2 + d3 - 2);
    it.eq("reg", inv.reg as i64, d1 + d2 + d3 - 3);
    it.eq(
        "tau",
        c.tau,
        (d - 1) * (d1 + d2 + d3) - (d1 * d2 + d1 * d3 + d2 * d3),
    );
    it.done()
}

fn eq1(c: &Ctx) -> Outcome {
    if c.m != 3 {
        return skip("needs a 3-syzygy curve");
    }
    let e = c.a.resolution.e_list[0] as i64;
    let d = c.d;
    let jac = c.a.curve.jacobian();
    let mut it = Items::default();
    for k in (e - 2).max(0)..=e + 3 {
        let formula = ring_dimension(k) - 3 * ring_dimension(k - d + 1)
            + c.ds.iter().map(|&dj| ring_dimension(k + 1 - d - dj)).sum::<i64>()
            - ring_dimension(k - e);
        it.eq(&format!("m_{k}"), jac.quotient_dimension(k as u32) as i64, formula);
    }
    it.done()
}

fn dual(c: &Ctx) -> Outcome {
    let table = &c.a.invariants.jacobian_module;
    let mut it = Items::default();
    let asym: Vec<i64> = (0..=c.t).filter(|&k| c.n(k) != c.n(c.t - k)).collect();
    it.holds(asym.is_empty(), format!("n_k = n_(T-k) for k in 0..={} {asym:?}", c.t));
    let tail: Vec<i64> = ((c.t + 1)..table.len() as i64).filter(|&k| c.n(k) != 0).collect();
    it.holds(tail.is_empty(), format!("n_k = 0 beyond T {tail:?}"));
    it.done()
}

fn unimodal(c: &Ctx) -> Outcome {
    let half = c.t / 2;
    let mut it = Items::default();
    it.holds(
        (0..half).all(|k| c.n(k) <= c.n(k + 1)),
        format!("n_k nondecreasing up to {half}"),
    );
    it.holds(
        (half..c.t).all(|k| c.n(k) >= c.n(k + 1)),
        format!("n_k nonincreasing from {half} to T"),
    );
    it.done()
}

fn sigma(c: &Ctx) -> Outcome {
    if c.m < 3 {
        return skip("free curve, N(f) = 0");
    }
    let e_last = *c.a.resolution.e_list.last().unwrap() as i64;
    let eps_last = *c.a.resolution.epsilons().last().unwrap();
    let dm = *c.ds.last().unwrap();
    let mut it = Items::default();
    let sigma = c.a.invariants.sigma.map(|s| s as i64);
    it.eq("sigma", sigma, Some(3 * (c.d - 1) - e_last));
    it.eq("sigma", sigma, Some(2 * (c.d - 1) - dm - eps_last));
    it.done()
}

fn thm_hs_sigma(c: &Ctx) -> Outcome {
    if c.m != 3 {
        return skip("needs a 3-syzygy curve");
    }
    let mut it = Items::default();
    it.eq(
        "sigma",
        c.a.invariants.sigma.map(|s| s as i64),
        Some(3 * (c.d - 1) - c.ds.iter().sum::<i64>()),
    );
    it.done()
}

fn prop_c(c: &Ctx) -> Outcome {
    if c.m != 3 || !c.singular() {
        return skip("needs a singular 3-syzygy curve");
    }
    let (d, ds) = (c.d, &c.ds);
    let (d1, d2, d3) = (ds[0], ds[1], ds[2]);
    if 2 * d1 > d {
        return skip(format!("2 d_1 = {} > d", 2 * d1));
    }
    let nu = c.a.invariants.nu as i64;
    let inv = &c.a.invariants;
    let mut it = Items::default();
    it.eq("nu", nu, (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3)));
    it.eq("nu", nu, d3 - d2 + 1 + (d1 + d2 - d) * (d1 + d3 - d + 2));
    if c.a.classification.is_plus_one {
        it.eq("nu", nu, d3 - d2 + 1);
        it.holds(nu <= d1, format!("nu <= d_1 = {d1}"));
        it.eq("ct + st", (inv.ct + inv.st) as i64, c.t + nu + 1);
    }
    it.done()
}

/// The shape `0 < k_3 = σ <= k_2 <= T/2` with `n_k` growing by one on
/// `[k_3, k_2]` and constant on `[k_2, T/2]`; returns `(k_3, k_2)`.
fn hs_shape(c: &Ctx) -> Option<(i64, i64)> {
    let k3 = c.a.invariants.sigma? as i64;
    let half = c.t / 2;
    if k3 == 0 || k3 > half {
        return None;
    }
    let mut k2 = k3;
    while k2 < half && c.n(k2 + 1) == k2 + 1 - k3 + 1 {
        k2 += 1;
    }
    let top = k2 - k3 + 1;
    ((k3..=k2).all(|k| c.n(k) == k - k3 + 1) && (k2..=half).all(|k| c.n(k) == top))
        .then_some((k3, k2))
}

fn cor_hs_pattern(c: &Ctx) -> Outcome {
    if !c.a.classification.is_plus_one {
        return skip("not plus-one generated");
    }
    let (d, ds) = (c.d, &c.ds);
    let k2 = 2 * d - ds[1] - 3;
    let k3 = 2 * d - ds[2] - 3;
    let half = c.t / 2;
    let mut it = Items::default();
    it.holds(0 < k3 && k3 <= k2 && k2 <= half, format!("0 < k_3 = {k3} <= k_2 = {k2} <= T/2"));
    it.holds((0..k3).all(|k| c.n(k) == 0), format!("n_k = 0 below {k3}"));
    it.holds(
        (k3..=k2).all(|k| c.n(k) == k - k3 + 1),
        format!("n_k = k - {k3} + 1 on [{k3}, {k2}]"),
    );
    it.holds(
        (k2..=half).all(|k| c.n(k) == ds[2] - ds[1] + 1),
        format!("n_k = {} on [{k2}, {half}]", ds[2] - ds[1] + 1),
    );
    it.eq("sigma", c.a.invariants.sigma.map(|s| s as i64), Some(k3));
    it.done()
}

fn thm_po2(c: &Ctx) -> Outcome {
    if c.m < 3 {
        return skip("free curve");
    }
    let (d, ds) = (c.d, &c.ds);
    let d1 = ds[0];
    let mut it = Items::default();
    it.eq(
        "N(f) has the plus-one shape iff plus-one generated",
        hs_shape(c).is_some(),
        c.a.classification.is_plus_one,
    );
    if c.a.invariants.nu == 2 && c.singular() {
        let base = (d - 1) * (d - 1) - d1 * (d - d1 - 1);
        match c.a.classification.nu2_shape {
            Nu2Shape::I => it.eq("shape (i) tau", c.tau, base - 2),
            Nu2Shape::II => {
                it.eq("shape (ii) tau", c.tau, 3 * d1 * d1 - 6 * d1 + 1);
                it.eq("shape (ii) tau", c.tau, base - 3);
            }
            Nu2Shape::Neither => it.holds(false, format!("nu = 2 but exponents {ds:?} fit neither shape")),
        }
    }
    it.done()
}

fn dpw(c: &Ctx) -> Outcome {
    let rec = &c.a.dpw;
    let mut it = Items::default();
    it.holds(c.tau >= rec.bound, format!("tau = {} >= {}", c.tau, rec.bound));
    it.eq("equality flag", rec.equality, c.tau == rec.bound);
    if let Some(strict) = rec.strict_bound {
        it.holds(c.tau >= strict, format!("line arrangement: tau >= {strict}"));
    }
    it.done()
}

fn tau1(c: &Ctx) -> Outcome {
    let Some(b) = &c.a.bourbaki else {
        return skip("free curve");
    };
    let (d, d1) = (c.d, c.ds[0]);
    let mut it = Items::default();
    it.eq("dim S/B", b.data.dimension, 1);
    it.eq(
        "deg B",
        b.data.degree as i64,
        (d - 1) * (d - 1) - d1 * (d - d1 - 1) - c.tau,
    );
    it.done()
}

fn b3(c: &Ctx) -> Outcome {
    let Some(b) = &c.a.bourbaki else {
        return skip("free curve");
    };
    let (d, d1) = (c.d, c.ds[0]);
    let ideal = &b.data.ideal;
    let dim_b = |j: i64| {
        if j < 0 {
            0
        } else {
            ring_dimension(j) - ideal.quotient_dimension(j as u32) as i64
        }
    };
    let bad: Vec<i64> = (0..=2 * d)
        .filter(|&k| {
            c.a.resolution.ar_dimension(k as u32) as i64
                != ring_dimension(k - d1) + dim_b(k + d1 - d + 1)
        })
        .collect();
    let mut it = Items::default();
    it.holds(bad.is_empty(), format!("dim AR_k = dim S_(k-d_1) + dim B_(k+d_1-d+1) for k <= 2d {bad:?}"));
    it.done()
}

fn prop_d(c: &Ctx) -> Outcome {
    let Some(b) = &c.a.bourbaki else {
        return skip("free curve");
    };
    let mut it = Items::default();
    it.eq("B complete intersection iff m = 3", b.data.is_complete_intersection, c.m == 3);
    if c.m == 3 {
        it.eq("deg B = deg g_2 deg g_3", b.data.degree, b.sub_ci_degree());
    }
    it.done()
}

fn prop_b(c: &Ctx) -> Outcome {
    if c.m != 3 {
        return skip("needs a 3-syzygy curve");
    }
    let (d, ds) = (c.d, &c.ds);
    let (d1, d2, d3) = (ds[0], ds[1], ds[2]);
    let upper = (d - 1) * (d - 1) - d1 * (d - d1 - 1) - (d3 - d2 + 1);
    let mut it = Items::default();
    it.eq("tau", c.tau, upper - (d1 + d2 - d) * (d1 + d3 - d + 2));
    it.eq(
        "tau",
        c.tau,
        (d - 1) * (d - d1 - 1) + d1 * d1 - (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3)),
    );
    it.holds(c.tau <= upper, format!("tau <= {upper}"));
    it.eq("equality iff plus-one", c.tau == upper, c.a.classification.is_plus_one);
    it.done()
}

fn cor_bour(c: &Ctx) -> Outcome {
    let Some(b) = &c.a.bourbaki else {
        return skip("free curve");
    };
    if !b.sub_ci {
        return skip("(g_2, g_3) share a factor");
    }
    let ds = &c.ds;
    let bound = crate::bourbaki::refined_bound(c.d as u32, ds[0] as u32, ds[1] as u32, ds[2] as u32);
    let mut it = Items::default();
    it.holds(c.tau >= bound, format!("tau = {} >= {bound}", c.tau));
    it.eq("equality iff m = 3", c.tau == bound, c.m == 3);
    it.done()
}

fn thm_new(c: &Ctx) -> Outcome {
    let Some(b) = &c.a.bourbaki else {
        return skip("free curve");
    };
    let mut it = Items::default();
    let Some(dp) = &b.d_prime else {
        it.holds(false, "no admissible d' in [d_3, min(d_m, d-1)]");
        return it.done();
    };
    let (d, ds) = (c.d, &c.ds);
    it.holds(c.tau >= dp.bound, format!("d' = {}: tau = {} >= {}", dp.d_prime, c.tau, dp.bound));
    it.eq("equality iff m = 3", c.tau == dp.bound, c.m == 3);
    if c.m == 3 {
        it.eq("d'", dp.d_prime as i64, ds[2]);
    }
    it.holds(dp.certificate_seed.is_some(), "a random element of the piece cuts g_2 properly");
    let minimal = c.tau == dpw_bound(d as u32, ds[0] as u32);
    it.eq(
        "minimal Tjurina iff 3-syzygy with d_2 = d_3 = d-1",
        minimal,
        c.m == 3 && ds[1] == d - 1 && ds[2] == d - 1,
    );
    if c.a.meta.line_arrangement == Some(true) {
        let strict = dpw_bound(d as u32, ds[0] as u32) + 2 * ds[0] - 1;
        it.holds(c.tau >= strict, format!("line arrangement: tau >= {strict}"));
    }
    it.done()
}

fn relation<'a>(c: &Ctx<'a>) -> Result<&'a crate::bourbaki::RelationData, Outcome> {
    if c.m != 3 {
        return Err(skip("needs a 3-syzygy curve"));
    }
    c.a.bourbaki
        .as_ref()
        .and_then(|b| b.relation.as_ref())
        .ok_or_else(|| Outcome::Items(vec![(false, "relation missing".into())]))
}

fn cor_a(c: &Ctx) -> Outcome {
    let rel = match relation(c) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let (d, ds) = (c.d, &c.ds);
    let mut it = Items::default();
    let want: Vec<i64> = (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            ds[j] + ds[k] - d + 1
        })
        .collect();
    let got: Vec<i64> = rel.degrees.iter().map(|&x| x as i64).collect();
    it.eq("deg h", got, want.clone());
    it.holds(want.iter().all(|&w| w >= 1), "deg h_i >= 1");
    let gens = &c.a.resolution.syzygies.generators;
    let vanishes = (0..3).all(|k| {
        rel.h
            .iter()
            .zip(gens)
            .fold(crate::poly::Poly::zero(), |acc, (h, r)| &acc + &(h * &r[k]))
            .is_zero()
    });
    it.holds(vanishes, "h_1 r_1 + h_2 r_2 + h_3 r_3 = 0");
    it.holds(rel.coprime, "h_i pairwise coprime");
    it.done()
}

fn rkcoeff(c: &Ctx) -> Outcome {
    let rel = match relation(c) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let mut it = Items::default();
    match &rel.alpha {
        Some(a) => it.holds(!a.is_zero(), format!("h_2 = {a} g_3, h_3 = -{a} g_2")),
        None => it.holds(false, "h_2, h_3 not proportional to g_3, -g_2"),
    }
    it.done()
}

fn cor_b1(c: &Ctx) -> Outcome {
    if c.a.meta.all_components_rational != Some(true) {
        return skip("rationality of the components not asserted");
    }
    let dm = *c.ds.last().unwrap();
    let mut it = Items::default();
    it.holds(dm < c.d, format!("d_m = {dm} <= d-1"));
    it.done()
}

fn cor_b2(c: &Ctx) -> Outcome {
    if c.a.meta.all_components_rational != Some(true) {
        return skip("rationality of the components not asserted");
    }
    if c.m != 3 || c.a.classification.is_plus_one {
        return skip("needs a 3-syzygy curve that is not plus-one generated");
    }
    let mut it = Items::default();
    it.holds(c.ds[2] <= c.d - 2, format!("d_3 = {} <= d-2", c.ds[2]));
    it.done()
}

fn rational_nearly_cuspidal(c: &Ctx) -> bool {
    c.a.meta.all_components_rational == Some(true) && c.a.meta.nearly_cuspidal == Some(true)
}

fn is_prime_power(n: i64) -> bool {
    let Some(p) = (2..=n).find(|p| n % p == 0) else {
        return false;
    };
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

fn thm2(c: &Ctx) -> Outcome {
    if !rational_nearly_cuspidal(c) {
        return skip("not asserted rational and nearly cuspidal");
    }
    let d = c.d;
    if d % 2 != 0 && !is_prime_power(d) {
        return skip(format!("d = {d} is odd and not a prime power"));
    }
    let nu = c.a.invariants.nu;
    let v = &c.a.classification.verdict;
    let mut it = Items::default();
    it.holds(nu <= 2, format!("nu = {nu} <= 2"));
    match nu {
        0 => it.holds(matches!(v, Verdict::Free { .. }), "nu = 0: free"),
        1 => it.holds(matches!(v, Verdict::NearlyFree { .. }), "nu = 1: nearly free"),
        2 if d % 2 == 0 => it.holds(c.a.classification.is_plus_one, "nu = 2, d even: plus-one"),
        _ => {}
    }
    it.done()
}

fn thm3(c: &Ctx) -> Outcome {
    if !rational_nearly_cuspidal(c) {
        return skip("not asserted rational and nearly cuspidal");
    }
    if c.d % 2 == 0 {
        return skip("even degree");
    }
    let half = (c.d - 1) / 2;
    let d1 = c.ds[0];
    let cl = &c.a.classification;
    let mut it = Items::default();
    it.holds(d1 <= half + 1, format!("d_1 = {d1} <= d'+1 = {}", half + 1));
    if d1 == half {
        let ok = matches!(cl.verdict, Verdict::Free { .. } | Verdict::NearlyFree { .. })
            || (cl.is_plus_one && c.a.invariants.nu == 2);
        it.holds(ok, "d_1 = d': free, nearly free, or plus-one with nu = 2");
    }
    if d1 == half + 1 {
        it.eq("d_1 = d'+1: shape", cl.nu2_shape, Nu2Shape::II);
    }
    if d1 == half || d1 == half + 1 {
        it.holds(c.a.invariants.nu <= 2, "nu <= 2");
    }
    it.done()
}
