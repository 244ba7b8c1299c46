//! Audit of the specialised corollary formulas for the two presets.
//!
//! Each printed formula is hard-coded exactly as published and evaluated
//! against the recurrence over a fixed index window. Alongside it the
//! corresponding general statement is instantiated at the preset, which
//! yields the corrected constant whenever the printed one is off.

use serde::Serialize;

use crate::arith::{GaussianRational, Rational};
use crate::genfunc::{expand_numerator, numerator_poly};
use crate::identities::{cassini, check_cassini, check_partial_sum, partial_sum_closed, partial_sum_constant};
use crate::omega::omega;
use crate::qfamily::{q_step, q_step_companion, q_step_using, q_term};
use crate::report::{IdentityReport, Status};
use crate::sequence::{negative_binet_forms, psi_seq, term_recurrence, terms_range, xi_seq, z_seq, Preset, SeedTriple};

/// Last index of the audit window `0..=AUDIT_MAX`.
pub const AUDIT_MAX: i64 = 24;

fn g(text: &str) -> GaussianRational {
    text.parse().expect("literal Gaussian rational")
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

/// `Ξ(n)` with the Ω(n) coefficient as printed:
/// `[2a+b−c + (2b−c)i]Ω(n) + [2a−b − (2a+b−c)i]Ω(n+1)`.
pub fn xi_printed(seed: &SeedTriple, n: i64) -> GaussianRational {
    let (a, b, c) = (seed.a(), seed.b(), seed.c());
    let two = Rational::from(2);
    let p = &(&(&two * a) + b) - c;
    let first = GaussianRational::new(p.clone(), &(&two * b) - c);
    let second = GaussianRational::new(&(&two * a) - b, -p);
    omega(n).times(&first) + omega(n + 1).times(&second)
}

/// Cassini in corollary shape `K + (1+i/2)2ⁿ⁻¹[A·Ω(n) + B·Ω(n+1)]`.
fn cassini_corollary(k: &GaussianRational, a: &GaussianRational, b: &GaussianRational, n: i64) -> GaussianRational {
    let weight = g("1+1/2i").scale(&Rational::pow2(n - 1));
    k + &(weight * (omega(n).times(a) + omega(n + 1).times(b)))
}

/// `(K, A, B)` of the corollary shape, derived from the general identity:
/// `K = (λ₁²−λ₁λ₂+λ₂²)/49`, `A = λ(8λ₁−3λ₂)/49`, `B = λ(3λ₁+5λ₂)/49`.
pub fn cassini_corollary_constants(seed: &SeedTriple) -> (GaussianRational, GaussianRational, GaussianRational) {
    let k = seed.constants();
    let scale = &k.lambda * &frac(1, 49);
    let (first, second) = crate::identities::cassini_expanded_coefficients(seed);
    (k.cross_constant().scale(&frac(1, 49)), first.scale(&scale), second.scale(&scale))
}

fn cassini_sweep(name: &str, seed: &SeedTriple, rhs: impl Fn(i64) -> GaussianRational) -> IdentityReport {
    IdentityReport::sweep(name, seed, (1..=AUDIT_MAX).map(|n| (vec![n], cassini(seed, n).lhs, rhs(n))))
}

fn sum_sweep(name: &str, seed: &SeedTriple, constant: &GaussianRational) -> IdentityReport {
    let terms = terms_range(seed, 0, AUDIT_MAX);
    let mut running = GaussianRational::zero();
    IdentityReport::sweep(
        name,
        seed,
        terms.iter().enumerate().map(|(n, t)| {
            running += t;
            let n = n as i64;
            (vec![n], running.clone(), partial_sum_closed(seed, n, constant))
        }),
    )
}

fn series_sweep(name: &str, seed: &SeedTriple, numerator: &[GaussianRational]) -> IdentityReport {
    let count = AUDIT_MAX as usize + 1;
    let series = expand_numerator(numerator, count).expect("nonempty window");
    let truth = terms_range(seed, 0, AUDIT_MAX);
    IdentityReport::sweep(
        name,
        seed,
        series.into_iter().zip(truth).enumerate().map(|(k, (c, t))| (vec![k as i64], t, c)),
    )
}

fn binet_sweep(name: &str, seed: &SeedTriple, closed: impl Fn(i64) -> GaussianRational) -> IdentityReport {
    IdentityReport::sweep(name, seed, (0..=AUDIT_MAX).map(|n| (vec![n], term_recurrence(seed, n), closed(n))))
}

fn psi_sweep(name: &str, seed: &SeedTriple, first: &GaussianRational, second: &GaussianRational) -> IdentityReport {
    IdentityReport::sweep(
        name,
        seed,
        (0..=AUDIT_MAX).map(|n| {
            let closed = omega(n).times(first) + omega(n + 1).times(second);
            (vec![n], psi_seq(seed, n), closed)
        }),
    )
}

/// Printed corollaries for one preset, each followed by the general
/// statement instantiated at that preset.
pub fn audit_corollaries(preset: Preset) -> Vec<IdentityReport> {
    let seed = preset.seed();
    let s = &seed;
    let seventh = frac(1, 7);
    let (k, a, b) = cassini_corollary_constants(s);
    match preset {
        Preset::Jg => vec![
            binet_sweep("jg binet corollary", s, |n| {
                let geo = g("1+1/2i").scale(&Rational::pow2(n + 1));
                (geo + omega(n).times(&g("1-3i")) - omega(n + 1).times(&g("2+i"))).scale(&seventh)
            }),
            psi_sweep("jg psi closed form", s, &g("-7i"), &g("-7")),
            cassini_sweep("jg cassini corollary (printed)", s, |n| {
                let geo = g("1+1/2i").scale(&Rational::pow2(n));
                let periodic = omega(n).times(&g("2-3i")) - omega(n + 1).times(&g("1+2i"));
                (g("-i") + geo * periodic).scale(&seventh)
            }),
            cassini_sweep("jg cassini corollary (derived)", s, |n| cassini_corollary(&k, &a, &b, n)),
            check_cassini(s, AUDIT_MAX),
            series_sweep("jg generating function corollary", s, &[g("0"), g("1"), g("i")]),
            sum_sweep("jg sum corollary (printed -1-2i)", s, &g("-1-2i")),
            sum_sweep("jg sum corollary (derived)", s, &partial_sum_constant(s)),
            check_partial_sum(s, AUDIT_MAX as u64),
        ],
        Preset::Kg => vec![
            binet_sweep("kg binet corollary", s, |n| {
                let geo = g("1+1/2i").scale(&Rational::pow2(n));
                geo + omega(n).times(&g("1+i")) + omega(n + 1).times(&g("2-i"))
            }),
            psi_sweep("kg psi closed form", s, &g("28+7i"), &g("35-28i")),
            cassini_sweep("kg cassini corollary (printed 2+5i)", s, |n| {
                cassini_corollary(&g("-3i"), &g("2+5i"), &g("13-2i"), n)
            }),
            cassini_sweep("kg cassini corollary (derived)", s, |n| cassini_corollary(&k, &a, &b, n)),
            check_cassini(s, AUDIT_MAX),
            series_sweep("kg generating function corollary", s, &[g("3-1/2i"), g("-2+7/2i"), g("-1-3/2i")]),
            sum_sweep("kg sum corollary (printed -3/2i)", s, &g("-3/2i")),
            sum_sweep("kg sum corollary (derived)", s, &partial_sum_constant(s)),
            check_partial_sum(s, AUDIT_MAX as u64),
        ],
    }
}

/// One printed formula next to its derived counterpart.
#[derive(Debug, Clone)]
pub struct AuditEntry {
    pub formula: String,
    pub printed: String,
    pub derived: String,
    pub printed_report: IdentityReport,
    pub derived_report: IdentityReport,
}

impl AuditEntry {
    pub fn printed_status(&self) -> Status {
        self.printed_report.status()
    }

    pub fn derived_status(&self) -> Status {
        self.derived_report.status()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct EntryJson<'a> {
            formula: &'a str,
            printed: &'a str,
            printed_verdict: Status,
            derived: &'a str,
            derived_verdict: Status,
            printed_report: serde_json::Value,
            derived_report: serde_json::Value,
        }
        serde_json::to_value(EntryJson {
            formula: &self.formula,
            printed: &self.printed,
            printed_verdict: self.printed_status(),
            derived: &self.derived,
            derived_verdict: self.derived_status(),
            printed_report: self.printed_report.to_json(),
            derived_report: self.derived_report.to_json(),
        })
        .expect("entry serializes")
    }
}

fn entry(
    formula: &str,
    printed: impl Into<String>,
    derived: impl Into<String>,
    printed_report: IdentityReport,
    derived_report: IdentityReport,
) -> AuditEntry {
    AuditEntry {
        formula: formula.to_string(),
        printed: printed.into(),
        derived: derived.into(),
        printed_report,
        derived_report,
    }
}

fn q_window() -> impl Iterator<Item = (u64, u64)> {
    (2..=5u64).flat_map(|q| (0..=10u64).map(move |m| (q, m)))
}

/// The full errata audit. Deterministic: the same entries and verdicts on
/// every run.
pub fn errata() -> Vec<AuditEntry> {
    let jg = Preset::Jg.seed();
    let kg = Preset::Kg.seed();
    let jg_reports = audit_corollaries(Preset::Jg);
    let kg_reports = audit_corollaries(Preset::Kg);
    let find = |reports: &[IdentityReport], name: &str| {
        reports.iter().find(|r| r.identity() == name).cloned().expect("audit report present")
    };
    let (_, kg_a, _) = cassini_corollary_constants(&kg);

    let mut out = vec![
        entry(
            "jg partial-sum corollary constant",
            "-1-2i",
            partial_sum_constant(&jg).to_string(),
            find(&jg_reports, "jg sum corollary (printed -1-2i)"),
            find(&jg_reports, "jg sum corollary (derived)"),
        ),
        entry(
            "kg partial-sum corollary constant",
            "-3/2i",
            partial_sum_constant(&kg).to_string(),
            find(&kg_reports, "kg sum corollary (printed -3/2i)"),
            find(&kg_reports, "kg sum corollary (derived)"),
        ),
        entry(
            "kg cassini corollary omega(n) coefficient",
            "2+5i",
            kg_a.to_string(),
            find(&kg_reports, "kg cassini corollary (printed 2+5i)"),
            find(&kg_reports, "kg cassini corollary (derived)"),
        ),
        entry(
            "jg cassini corollary",
            "(1/7){-i+(1+i/2)2^n[(2-3i)omega(n)-(1+2i)omega(n+1)]}",
            "(1/7){-i+(1+i/2)2^n[(2-3i)omega(n)-(1+2i)omega(n+1)]}",
            find(&jg_reports, "jg cassini corollary (printed)"),
            find(&jg_reports, "jg cassini corollary (derived)"),
        ),
        entry(
            "xi(n) omega(n) coefficient, imaginary part",
            "(2b-c)",
            "(c-2b)",
            IdentityReport::sweep(
                "xi printed",
                &jg,
                (0..=AUDIT_MAX).map(|n| {
                    let truth = term_recurrence(&jg, n).scale_int(2) - term_recurrence(&jg, n + 1);
                    (vec![n], truth, xi_printed(&jg, n))
                }),
            ),
            IdentityReport::sweep(
                "xi derived",
                &jg,
                (0..=AUDIT_MAX).map(|n| {
                    let truth = term_recurrence(&jg, n).scale_int(2) - term_recurrence(&jg, n + 1);
                    (vec![n], truth, xi_seq(&jg, n))
                }),
            ),
        ),
        entry(
            "q-step relation with printed xi",
            "Jg(mq+1;q) = 2Jg(mq;q) - Jg(m(q-1);q-1) xi_printed(m)",
            "Jg(mq+1;q) = 2Jg(mq;q) - Jg(m(q-1);q-1) xi(m)",
            IdentityReport::sweep(
                "qstep printed xi",
                &jg,
                q_window().map(|(q, m)| {
                    let (lhs, rhs) = q_step_using(&jg, q, m, &xi_printed(&jg, m as i64)).expect("q >= 2");
                    (vec![q as i64, m as i64], lhs, rhs)
                }),
            ),
            q_sweep("qstep", &jg, |q, m| q_step(&jg, q, m).expect("q >= 2")),
        ),
        entry(
            "q-step companion relation",
            "Jg(mq+1;q) = 2Jg(mq;q) + Jg((m+1)q-1;q) + Jg(m(q-1);q-1) xi(m)",
            "Jg(mq+1;q) = 2Jg(mq;q) - Jg(m(q-1);q-1) xi(m)",
            q_sweep("qstep-companion", &jg, |q, m| q_step_companion(&jg, q, m).expect("q >= 2")),
            q_sweep("qstep", &jg, |q, m| q_step(&jg, q, m).expect("q >= 2")),
        ),
    ];

    for (preset, reports) in [(Preset::Jg, &jg_reports), (Preset::Kg, &kg_reports)] {
        let name = preset.name();
        let seed = preset.seed();
        let binet = find(reports, &format!("{name} binet corollary"));
        out.push(entry(
            &format!("{name} binet corollary"),
            "printed",
            "general binet formula",
            binet,
            binet_sweep(&format!("{name} binet general"), &seed, |n| {
                (seed.constants().geometric(n) + z_seq(&seed, n)).scale(&frac(1, 7))
            }),
        ));
        out.push(entry(
            &format!("{name} psi closed form"),
            "printed",
            "(2l1+l2)omega(n)+(3l2-l1)omega(n+1)",
            find(reports, &format!("{name} psi closed form")),
            IdentityReport::sweep(
                format!("{name} psi general"),
                &seed,
                (0..=AUDIT_MAX).map(|n| {
                    let two_z = z_seq(&seed, n).scale_int(2);
                    (vec![n], psi_seq(&seed, n), two_z - z_seq(&seed, n + 1))
                }),
            ),
        ));
        let numerator = numerator_poly(&seed);
        out.push(entry(
            &format!("{name} generating function numerator"),
            match preset {
                Preset::Jg => "xi+xi^2 i",
                Preset::Kg => "3-2xi-xi^2-(1/2)[1-7xi+3xi^2]i",
            },
            numerator.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            find(reports, &format!("{name} generating function corollary")),
            series_sweep(&format!("{name} generating function general"), &seed, &numerator),
        ));
    }

    out.push(entry(
        "negative-subscript binet forms",
        "(1/7)[...-l1 omega(n)-l2 omega(n-1)] = (1/7)[...+(2a-5b+2c-(6a-b-c)i)omega(n)+l2 omega(n+1)]",
        "Jg(-n) by backward recurrence",
        IdentityReport::sweep(
            "negative binet agreement",
            &kg,
            (1..=AUDIT_MAX).map(|n| {
                let (first, second) = negative_binet_forms(&kg, n);
                (vec![n], first, second)
            }),
        ),
        IdentityReport::sweep(
            "negative binet vs recurrence",
            &kg,
            (1..=AUDIT_MAX).map(|n| (vec![n], term_recurrence(&kg, -n), negative_binet_forms(&kg, n).0)),
        ),
    ));

    out.push(entry(
        "q-family closed form",
        "7^-q [l(1+i/2)2^m+Z(m)]^(q-r) [l(2+i)2^m+Z(m+1)]^r",
        "Jg(m)^(q-r) Jg(m+1)^r",
        IdentityReport::sweep(
            "q closed form",
            &kg,
            (1..=4u64).flat_map(|q| (0..=AUDIT_MAX as u64).map(move |n| (q, n))).map(|(q, n)| {
                let (m, r) = (n / q, n % q);
                let k = kg.constants();
                let mi = m as i64;
                let low = k.geometric(mi) + z_seq(&kg, mi);
                let high = k.geometric(mi).scale_int(2) + z_seq(&kg, mi + 1);
                let closed = (low.pow(q - r) * high.pow(r)).scale(&inverse_power_of_seven(q));
                (vec![q as i64, n as i64], q_term(&kg, q, n).expect("q >= 1"), closed)
            }),
        ),
        IdentityReport::sweep(
            "q product form",
            &kg,
            (1..=4u64).flat_map(|q| (0..=AUDIT_MAX as u64).map(move |n| (q, n))).map(|(q, n)| {
                let (m, r) = (n / q, n % q);
                let direct = term_recurrence(&kg, m as i64).pow(q - r) * term_recurrence(&kg, m as i64 + 1).pow(r);
                (vec![q as i64, n as i64], q_term(&kg, q, n).expect("q >= 1"), direct)
            }),
        ),
    ));
    out
}

fn inverse_power_of_seven(q: u64) -> Rational {
    let power = (0..q).fold(Rational::one(), |acc, _| acc * Rational::from(7));
    power.recip().expect("nonzero power")
}

fn q_sweep(
    name: &str,
    seed: &SeedTriple,
    sides: impl Fn(u64, u64) -> (GaussianRational, GaussianRational),
) -> IdentityReport {
    IdentityReport::sweep(
        name,
        seed,
        q_window().map(|(q, m)| {
            let (lhs, rhs) = sides(q, m);
            (vec![q as i64, m as i64], lhs, rhs)
        }),
    )
}
