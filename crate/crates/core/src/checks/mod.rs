//! Named verification suites. Each check runs one or more cases and reports
//! a verdict per case; the CLI and the acceptance tests share them.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::grammar::{surrogate_operator, FamilyKind, LinearDiffOp, SurrogateKind};
use crate::polyring::{monomial, Assignment, Image, Monomial, Polynomial, Variable};
use crate::stability::{
    certify, counterexample_point, gessel_stanley_series, lemma_gate, raw_partition_step, sample_falsify, stirling2,
    sturm_report, tn_from_eulerian, SamplerConfig, Specialization, DEFAULT_EXPAND_LIMIT,
};
use crate::structures::{coefficient_table, enumeration_polynomial, weight_polynomial, Statistic, StructureFamily};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Oracle,
    TnIdentity,
    GesselStanley,
    Symmetry,
    Equidistribution,
    OperatorEquivalence,
    Sturm,
    LemmaGate,
    Counterexample,
    Divisibility,
    Multiaffine,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Oracle,
        Check::TnIdentity,
        Check::GesselStanley,
        Check::Symmetry,
        Check::Equidistribution,
        Check::OperatorEquivalence,
        Check::Sturm,
        Check::LemmaGate,
        Check::Counterexample,
        Check::Divisibility,
        Check::Multiaffine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::TnIdentity => "tn-identity",
            Check::GesselStanley => "gessel-stanley",
            Check::Symmetry => "symmetry",
            Check::Equidistribution => "equidistribution",
            Check::OperatorEquivalence => "operator-equivalence",
            Check::Sturm => "sturm",
            Check::LemmaGate => "lemma-gate",
            Check::Counterexample => "counterexample",
            Check::Divisibility => "divisibility",
            Check::Multiaffine => "multiaffine",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        Check::ALL.into_iter().find(|c| c.name() == t).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Narrows a check to one family and/or one order; `None` runs the default
/// range of the check.
#[derive(Clone, Debug, Default)]
pub struct CheckParams {
    pub family: Option<String>,
    pub n: Option<usize>,
    pub sampler: SamplerConfig,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub check: String,
    pub case: String,
    pub passed: bool,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

fn case(check: Check, name: impl Into<String>, passed: bool, detail: Value) -> CaseResult {
    CaseResult { check: check.name().to_string(), case: name.into(), passed, detail, elapsed_ms: None }
}

/// Grammar family for a family name; structure names map to their
/// multivariate grammar (`stirling` → `stirling2_multi`, ...).
pub fn parse_kind(name: &str) -> Result<FamilyKind, Error> {
    match name.trim().to_ascii_lowercase().replace('_', "-").as_str() {
        "permutation" | "eulerian" => Ok(FamilyKind::EulerianMulti),
        "partition" => Ok(FamilyKind::PartitionMulti),
        "stirling" | "stirling2" => Ok(FamilyKind::Stirling2Multi),
        "marked-stirling" | "marked" => Ok(FamilyKind::MarkedMulti),
        _ => name.parse(),
    }
}

fn orders(n: Option<usize>, from: usize, to: usize) -> Vec<usize> {
    match n {
        Some(n) => vec![n],
        None => (from..=to).collect(),
    }
}

/// Default order bound of the oracle comparison for each family.
pub fn oracle_bound(kind: FamilyKind) -> usize {
    match kind {
        FamilyKind::EulerianUni | FamilyKind::EulerianMulti => 6,
        FamilyKind::PartitionUni | FamilyKind::PartitionMulti => 8,
        FamilyKind::Stirling2Uni | FamilyKind::Stirling2Multi => 5,
        FamilyKind::MarkedUni | FamilyKind::MarkedMulti => 5,
        FamilyKind::Legendre => 3,
    }
}

/// One case of a check, run lazily so it can be timed on its own.
type Job = Box<dyn FnOnce() -> Result<CaseResult, Error>>;

fn job(f: impl FnOnce() -> CaseResult + 'static) -> Job {
    Box::new(move || Ok(f()))
}

fn per_order(n: Option<usize>, from: usize, to: usize, f: fn(usize) -> CaseResult) -> Vec<Job> {
    orders(n, from, to).into_iter().map(|k| job(move || f(k))).collect()
}

/// Runs one check, timing each case when `timings` is set.
pub fn run(check: Check, params: &CheckParams, timings: bool) -> Result<Vec<CaseResult>, Error> {
    let jobs = match check {
        Check::Oracle => oracle(params)?,
        Check::TnIdentity => per_order(params.n, 1, 6, tn_identity),
        Check::GesselStanley => per_order(params.n, 1, 4, |k| gessel_stanley(k, 8)),
        Check::Symmetry => per_order(params.n, 1, 6, symmetry),
        Check::Equidistribution => per_order(params.n, 1, 5, equidistribution),
        Check::OperatorEquivalence => operator_equivalence(params.n),
        Check::Sturm => sturm(params)?,
        Check::LemmaGate => lemma_gates(params),
        Check::Counterexample => {
            let sampler = params.sampler.clone();
            vec![job(move || counterexample(&sampler))]
        }
        Check::Divisibility => per_order(params.n, 1, 3, divisibility),
        Check::Multiaffine => multiaffine(params)?,
    };
    jobs.into_iter()
        .map(|j| {
            let start = Instant::now();
            let mut r = j()?;
            if timings {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            Ok(r)
        })
        .collect()
}

fn oracle(params: &CheckParams) -> Result<Vec<Job>, Error> {
    let kinds = match &params.family {
        Some(f) => vec![parse_kind(f)?],
        None => FamilyKind::ALL.to_vec(),
    };
    let mut out = Vec::new();
    for kind in kinds {
        for n in orders(params.n, 0, oracle_bound(kind)) {
            out.push(job(move || {
                let grammar = kind.iterate(n);
                let structures = enumeration_polynomial(kind, n);
                case(
                    Check::Oracle,
                    format!("{} n={n}", kind.name()),
                    grammar == structures,
                    json!({ "terms": grammar.len(), "coefficient_sum": grammar.coefficient_sum().to_string() }),
                )
            }));
        }
    }
    Ok(out)
}

fn tn_identity(n: usize) -> CaseResult {
    let lhs = Specialization::T.polynomial(n);
    let rhs = tn_from_eulerian(n);
    case(Check::TnIdentity, format!("n={n}"), lhs == rhs, json!({ "T_n": lhs.to_string(), "sum": rhs.to_string() }))
}

fn gessel_stanley(k: usize, order: usize) -> CaseResult {
    let series = gessel_stanley_series(k, order);
    let lower: Vec<_> = (0..=order).map(|n| stirling2(n + k, n)).collect();
    let literal: Vec<_> = (0..=order).map(|n| stirling2(n + k, k)).collect();
    let show = |v: &[num_bigint::BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    case(
        Check::GesselStanley,
        format!("k={k} order={order}"),
        series == lower,
        json!({
            "series": show(&series),
            "S(n+k,n)": show(&lower),
            "S(n+k,k)": show(&literal),
            "matches_S(n+k,k)": series == literal,
        }),
    )
}

/// `C_n(x, y, z)` with every `x_i ↦ x0`, `y_i ↦ y0`, `z_i ↦ z0`.
pub fn trivariate_stirling(n: usize) -> Polynomial {
    let p = weight_polynomial(StructureFamily::Stirling, n);
    let assignment: Assignment = p
        .variables()
        .into_iter()
        .map(|v| (v, Image::Var(Variable { family: v.family, index: 0 })))
        .collect();
    p.specialize(&assignment).expect("variable images")
}

fn symmetry(n: usize) -> CaseResult {
    let p = trivariate_stirling(n);
    let (x, y, z) = (Variable::x(0), Variable::y(0), Variable::z(0));
    let perms = [[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]];
    let symmetric = perms.iter().all(|&[a, b, c]| {
        let assignment = Assignment::from([(x, Image::Var(a)), (y, Image::Var(b)), (z, Image::Var(c))]);
        p.specialize(&assignment).expect("variable images") == p
    });
    case(Check::Symmetry, format!("n={n}"), symmetric, json!({ "terms": p.len() }))
}

fn equidistribution(n: usize) -> CaseResult {
    let hist = |s: Statistic| coefficient_table(StructureFamily::Stirling, n, &[s]).expect("statistic defined");
    let (asc, des, plat) = (hist(Statistic::Asc), hist(Statistic::Des), hist(Statistic::Plat));
    let rows: Vec<(usize, u64)> = des.iter().map(|(k, c)| (k[0], *c)).collect();
    case(Check::Equidistribution, format!("n={n}"), asc == des && des == plat, json!({ "des": rows }))
}

fn operator_equivalence(n: Option<usize>) -> Vec<Job> {
    let mut out = Vec::new();
    for k in orders(n, 1, 5) {
        out.push(job(move || {
            let s_k = FamilyKind::PartitionMulti.iterate(k);
            let raw = FamilyKind::PartitionMulti.grammar(k + 1).derive(&s_k);
            let surrogate = surrogate_operator(SurrogateKind::PartitionMulti, k as u32 + 1).apply(&s_k);
            case(
                Check::OperatorEquivalence,
                format!("partition_multi n={k}"),
                raw == surrogate,
                json!({ "terms": raw.len() }),
            )
        }));
    }
    for k in orders(n, 1, 3) {
        out.push(job(move || {
            let f_odd = FamilyKind::Legendre.iterate_steps(2 * k - 1);
            let raw = FamilyKind::Legendre.grammar(2 * k).derive(&f_odd);
            let surrogate = surrogate_operator(SurrogateKind::LegendreEven, k as u32).apply(&f_odd);
            case(
                Check::OperatorEquivalence,
                format!("legendre_even n={k}"),
                raw == surrogate,
                json!({ "terms": raw.len() }),
            )
        }));
    }
    out.push(job(|| {
        let p = &Polynomial::var(Variable::a(0)) + &Polynomial::var(Variable::b(1));
        let raw = FamilyKind::PartitionMulti.grammar(2).derive(&p);
        let surrogate = surrogate_operator(SurrogateKind::PartitionMulti, 2).apply(&p);
        case(
            Check::OperatorEquivalence,
            "off-sequence D_2(a+b_1) != T_2(a+b_1)",
            raw != surrogate,
            json!({ "raw": raw.to_string(), "surrogate": surrogate.to_string() }),
        )
    }));
    out
}

fn sturm_case(spec: Specialization, n: usize) -> Result<CaseResult, Error> {
    let p = spec.polynomial(n);
    let report = sturm_report(&p)?;
    let strict = matches!(spec, Specialization::B | Specialization::C);
    let passed = report.all_real && (!strict || (report.distinct && report.all_nonpositive));
    let mut detail = serde_json::to_value(&report).expect("serializable");
    detail["polynomial"] = json!(p.to_string());
    Ok(case(Check::Sturm, format!("{}_{n}(x)", spec.name()), passed, detail))
}

/// Default order bound of the real-rootedness suite.
pub fn sturm_bound(spec: Specialization) -> usize {
    match spec {
        Specialization::B | Specialization::M => 3,
        _ => 6,
    }
}

fn sturm(params: &CheckParams) -> Result<Vec<Job>, Error> {
    let specs = match &params.family {
        Some(f) => vec![f.parse::<Specialization>()?],
        None => Specialization::ALL.to_vec(),
    };
    let mut out: Vec<Job> = Vec::new();
    for spec in specs {
        for n in orders(params.n, 1, sturm_bound(spec)) {
            out.push(Box::new(move || sturm_case(spec, n)));
        }
    }
    Ok(out)
}

/// The operators whose product test should pass at order `n`, with the
/// variables they act on.
pub fn gate_cases(n: usize) -> Vec<(String, LinearDiffOp, Vec<Variable>)> {
    let xyz = |i: u32| [Variable::x(i), Variable::y(i), Variable::z(i)];
    let all5 = |i: u32| [Variable::x(i), Variable::y(i), Variable::z(i), Variable::u(i), Variable::v(i)];
    let m = n as u32;
    let mut cases = Vec::new();
    let eulerian: Vec<Variable> = (0..=m).flat_map(|i| [Variable::x(i), Variable::y(i)]).collect();
    cases.push((
        format!("eulerian_multi step {}", n + 1),
        LinearDiffOp::from(&FamilyKind::EulerianMulti.grammar(n + 1)),
        eulerian,
    ));
    let stirling: Vec<Variable> = (0..=m).flat_map(xyz).collect();
    for kind in [FamilyKind::Stirling2Multi, FamilyKind::MarkedMulti] {
        cases.push((
            format!("{} step {}", kind.name(), n + 1),
            LinearDiffOp::from(&kind.grammar(n + 1)),
            stirling.clone(),
        ));
    }
    if n >= 1 {
        let odd: Vec<Variable> = (0..m).flat_map(all5).collect();
        cases.push((
            format!("legendre step {}", 2 * n - 1),
            LinearDiffOp::from(&FamilyKind::Legendre.grammar(2 * n - 1)),
            odd,
        ));
        let mut even: Vec<Variable> = (0..m).flat_map(all5).collect();
        even.extend([Variable::u(m), Variable::v(m)]);
        cases.push((format!("legendre_even surrogate n={n}"), surrogate_operator(SurrogateKind::LegendreEven, m), even));
    }
    let partition: Vec<Variable> = std::iter::once(Variable::a(0)).chain((1..=m).map(Variable::b)).collect();
    cases.push((
        format!("partition_multi surrogate n={}", n + 1),
        surrogate_operator(SurrogateKind::PartitionMulti, m + 1),
        partition,
    ));
    cases
}

fn lemma_gates(params: &CheckParams) -> Vec<Job> {
    let mut out = Vec::new();
    for n in orders(params.n, 0, 3) {
        for (name, t, vars) in gate_cases(n) {
            let sampler = params.sampler.clone();
            out.push(job(move || {
                let report = lemma_gate(&t, &vars, &sampler, DEFAULT_EXPAND_LIMIT);
                let summary = serde_json::to_value(report.summary()).expect("serializable");
                case(Check::LemmaGate, name, report.passes(), summary)
            }));
        }
    }
    let sampler = params.sampler.clone();
    out.push(job(move || {
        let vars = [Variable::a(0), Variable::b(1)];
        let raw = lemma_gate(&raw_partition_step(), &vars, &sampler, DEFAULT_EXPAND_LIMIT);
        let certified = match (&raw.witness, &raw.expanded) {
            (Some(w), Some(e)) => certify(e, w),
            _ => false,
        };
        case(
            Check::LemmaGate,
            "raw partition_multi step 2 (expect witness)",
            certified,
            serde_json::to_value(raw.summary()).expect("serializable"),
        )
    }));
    out
}

fn counterexample(sampler: &SamplerConfig) -> CaseResult {
    let (a, b1, b2, w, u) = (Variable::a(0), Variable::b(1), Variable::b(2), Variable::p(0), Variable::p(1));
    let f = &(&Polynomial::var(a) + &Polynomial::var(w)) * &(&Polynomial::var(b1) + &Polynomial::var(u));
    let image = raw_partition_step().apply(&f);
    let expected = monomial([b2, a, b1]) + monomial([b2, a, u]) + monomial([b2, a]) + monomial([b2, w]);
    let point = counterexample_point();
    let value = image.evaluate(&point).expect("point assigns every variable");
    let cfg = sampler.clone().inject(point);
    let witness = sample_falsify(&image, &cfg);
    let found = witness.as_ref().is_some_and(|wit| wit.index == 0 && certify(&image, wit));
    case(
        Check::Counterexample,
        "D_2((a+w)(b_1+u)) at a=(i-1)/2, b_1=u=i/2-1, w=i, b_2=i",
        image == expected && value.is_zero() && found,
        json!({
            "image": image.to_string(),
            "value": value.to_ratio_strings(),
            "witness": witness.map(|w| serde_json::to_value(w).expect("serializable")),
        }),
    )
}

fn divisibility(n: usize) -> CaseResult {
    let f = FamilyKind::Legendre.trajectory(2 * n);
    let uv = Monomial::product([Variable::u(n as u32), Variable::v(n as u32)]);
    let u = Monomial::var(Variable::u(n as u32));
    let odd = f[2 * n - 1].terms().all(|(m, _)| uv.divides(m));
    let even = f[2 * n].terms().all(|(m, _)| u.divides(m));
    case(
        Check::Divisibility,
        format!("n={n}"),
        odd && even,
        json!({ "f_odd_divisible_by_u_n_v_n": odd, "f_even_divisible_by_u_n": even }),
    )
}

fn multiaffine(params: &CheckParams) -> Result<Vec<Job>, Error> {
    let kinds = match &params.family {
        Some(f) => vec![parse_kind(f)?],
        None => FamilyKind::ALL.into_iter().filter(|k| k.is_multivariate()).collect(),
    };
    let mut out = Vec::new();
    for kind in kinds {
        let steps = kind.steps(params.n.unwrap_or(oracle_bound(kind)));
        out.push(job(move || {
            let all = kind.trajectory(steps).iter().all(Polynomial::is_multiaffine);
            case(Check::Multiaffine, format!("{} steps 0..={steps}", kind.name()), all, json!({ "steps": steps }))
        }));
    }
    Ok(out)
}

/// Runs several checks and collects every case.
pub fn run_all(checks: &[Check], params: &CheckParams, timings: bool) -> Result<Vec<CaseResult>, Error> {
    let mut out = Vec::new();
    for &c in checks {
        out.extend(run(c, params, timings)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(parse_kind("stirling").unwrap(), FamilyKind::Stirling2Multi);
        assert_eq!(parse_kind("legendre").unwrap(), FamilyKind::Legendre);
    }

    #[test]
    fn quick_checks_pass() {
        let params = CheckParams { n: Some(2), ..Default::default() };
        for c in [Check::Oracle, Check::TnIdentity, Check::Symmetry, Check::Divisibility, Check::Counterexample] {
            let results = run(c, &params, false).unwrap();
            assert!(results.iter().all(|r| r.passed), "{c}: {results:?}");
        }
    }
}
