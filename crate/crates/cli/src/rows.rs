//! Adapters turning core report types into output rows. The cell view is a
//! flattening of the same fields that appear in the JSON object.

use crate::emit::Row;
use ntlab_core::dioph::{CrossReport, DiophSolution, Provenance};
use ntlab_core::loeschian::{
    ClosureReport, ComposedForm, IdentityGridReport, LoeschianRep, PowerIdentityReport,
    PrimeClassSweepReport, SolvabilitySweepReport,
};
use ntlab_core::power_eq::PowerEqSolution;
use ntlab_core::pseudofib::{CardanoReport, CharacteristicRoots, SolutionSpaceReport};
use ntlab_core::repunit::{RepunitReport, TheoremCase, Verdict};
use ntlab_core::Natural;
use serde_json::json;

fn naturals(list: &[Natural]) -> String {
    list.iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn repunit_row(report: &RepunitReport) -> Row {
    let case = match report.theorem_case {
        TheoremCase::T1 => "T1",
        TheoremCase::T2 => "T2",
        TheoremCase::T3 => "T3",
        TheoremCase::T4 => "T4",
        TheoremCase::None => "none",
    };
    let verdict = match &report.verdict {
        Verdict::Consistent => "consistent".to_string(),
        Verdict::Violation(details) => format!("violation: {details}"),
        Verdict::Indeterminate(cofactor) => format!("indeterminate: cofactor {cofactor}"),
    };
    let readings = report
        .theorem3_readings
        .map(|r| {
            format!(
                "all>p:{};one>p:{}",
                r.all_divisors_exceed_p, r.exactly_one_exceeds_p
            )
        })
        .unwrap_or_default();
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("p", report.p.to_string()),
            ("q", report.q.to_string()),
            ("A", report.a.to_string()),
            ("factors", report.factorization.display_compact()),
            ("below_p", naturals(&report.below_p)),
            ("above_p", naturals(&report.above_p)),
            ("case", case.to_string()),
            ("verdict", verdict),
            ("t3_readings", readings),
        ],
    }
}

pub fn power_eq_row(solution: &PowerEqSolution) -> Row {
    Row {
        json: serde_json::to_value(solution).unwrap(),
        cells: vec![
            ("base", solution.base.to_string()),
            ("x", solution.x.to_string()),
            ("y", solution.y.to_string()),
            ("z", solution.z.to_string()),
            (
                "provenance",
                format!("{:?}", solution.provenance).to_lowercase(),
            ),
        ],
    }
}

pub fn decomposition_row(n: u64, exponents: &Option<Vec<u64>>) -> Row {
    let rendered = exponents
        .as_ref()
        .map(|e| {
            e.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("+")
        })
        .unwrap_or_else(|| "none".to_string());
    Row {
        json: json!({ "n": n, "mersenne_exponents": exponents }),
        cells: vec![("n", n.to_string()), ("mersenne_exponents", rendered)],
    }
}

fn provenance_text(p: &Provenance) -> String {
    match p {
        Provenance::Search => "search".to_string(),
        Provenance::ClosedForm { family, param } => format!("closed_form:{family}:{param}"),
    }
}

pub fn dioph_solution_row(solution: &DiophSolution) -> Row {
    Row {
        json: serde_json::to_value(solution).unwrap(),
        cells: vec![
            ("equation", solution.equation.to_string()),
            ("x", solution.x.to_string()),
            ("y", solution.y.to_string()),
            (
                "z",
                solution.z.map(|z| z.to_string()).unwrap_or_default(),
            ),
            ("provenance", provenance_text(&solution.provenance)),
        ],
    }
}

fn solution_keys(list: &[DiophSolution]) -> String {
    list.iter()
        .map(|s| match s.z {
            Some(z) => format!("({},{},{z})", s.x, s.y),
            None => format!("({},{})", s.x, s.y),
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn cross_report_row(report: &CrossReport) -> Row {
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("equation", report.equation.to_string()),
            ("family_status", format!("{:?}", report.family_status).to_lowercase()),
            ("search_count", report.search_solutions.len().to_string()),
            ("family_count", report.family_solutions.len().to_string()),
            ("matched", report.matched.to_string()),
            ("missed_by_family", solution_keys(&report.missed_by_family)),
            ("extra_in_family", solution_keys(&report.extra_in_family)),
            ("skipped", report.skipped_candidates.to_string()),
        ],
    }
}

pub fn loeschian_rep_row(rep: &LoeschianRep) -> Row {
    Row {
        json: serde_json::to_value(rep).unwrap(),
        cells: vec![
            ("a", rep.a.to_string()),
            ("b", rep.b.to_string()),
            ("value", rep.value.to_string()),
            ("primitive", rep.primitive.to_string()),
        ],
    }
}

pub fn solvable_row(n: &Natural, solvable: bool) -> Row {
    Row {
        json: json!({ "n": n.to_string(), "solvable": solvable }),
        cells: vec![
            ("n", n.to_string()),
            ("solvable", solvable.to_string()),
        ],
    }
}

pub fn closure_row(report: &ClosureReport) -> Row {
    let violations = report
        .violations
        .iter()
        .map(|(n, d)| format!("{n}%{d}"))
        .collect::<Vec<_>>()
        .join(";");
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("n_max", report.n_max.to_string()),
            ("primitive_values", report.primitive_values.to_string()),
            ("divisor_checks", report.divisor_checks.to_string()),
            ("violations", violations),
        ],
    }
}

pub fn identity_grid_row(report: &IdentityGridReport) -> Row {
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("limit", report.limit.to_string()),
            ("tuples_checked", report.tuples_checked.to_string()),
            (
                "product_identity_failures",
                report.product_identity_failures.to_string(),
            ),
            ("cross_term_failures", report.cross_term_failures.to_string()),
        ],
    }
}

pub fn solvability_sweep_row(report: &SolvabilitySweepReport) -> Row {
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("n_max", report.n_max.to_string()),
            ("checked", report.checked.to_string()),
            (
                "mismatches",
                report
                    .mismatches
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            ),
        ],
    }
}

pub fn prime_sweep_row(report: &PrimeClassSweepReport) -> Row {
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("n_max", report.n_max.to_string()),
            ("primes_checked", report.primes_checked.to_string()),
            (
                "mismatches",
                report
                    .mismatches
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            ),
        ],
    }
}

fn form_text(form: &ComposedForm) -> String {
    if form.degenerate {
        format!("({},{})!", form.a, form.b)
    } else {
        format!("({},{})", form.a, form.b)
    }
}

pub fn power_identity_row(report: &PowerIdentityReport) -> Row {
    let levels = report
        .powers
        .iter()
        .map(|lvl| {
            format!(
                "e{}:{}",
                lvl.exponent,
                lvl.forms.iter().map(form_text).collect::<Vec<_>>().join("|")
            )
        })
        .collect::<Vec<_>>()
        .join(" ");
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("base_value", report.base_value.to_string()),
            ("square_form", form_text(&report.square_form)),
            ("square_ok", report.square_ok.to_string()),
            ("cube_form", form_text(&report.cube_form)),
            ("cube_ok", report.cube_ok.to_string()),
            ("all_values_ok", report.all_values_ok.to_string()),
            ("powers", levels),
        ],
    }
}

pub fn term_row(n: usize, value: &Natural) -> Row {
    Row {
        json: json!({ "n": n, "value": value.to_string() }),
        cells: vec![("n", n.to_string()), ("value", value.to_string())],
    }
}

pub fn sum_row(n: usize, value: &Natural, level: usize) -> Row {
    Row {
        json: json!({ "level": level, "n": n, "value": value.to_string() }),
        cells: vec![
            ("level", level.to_string()),
            ("n", n.to_string()),
            ("value", value.to_string()),
        ],
    }
}

pub fn roots_row(roots: &CharacteristicRoots) -> Vec<Row> {
    roots
        .roots
        .iter()
        .enumerate()
        .map(|(i, r)| Row {
            json: json!({
                "order": roots.order,
                "index": i,
                "re": r.re,
                "im": r.im,
                "dominant": i == 0,
            }),
            cells: vec![
                ("order", roots.order.to_string()),
                ("index", i.to_string()),
                ("re", format!("{:.12}", r.re)),
                ("im", format!("{:.12}", r.im)),
                ("dominant", (i == 0).to_string()),
            ],
        })
        .collect()
}

pub fn closed_form_compare_row(n: usize, exact: &Natural, approx: f64, rel_err: f64) -> Row {
    Row {
        json: json!({
            "n": n,
            "exact": exact.to_string(),
            "closed_form": approx,
            "rel_err": rel_err,
        }),
        cells: vec![
            ("n", n.to_string()),
            ("exact", exact.to_string()),
            ("closed_form", format!("{approx:.6}")),
            ("rel_err", format!("{rel_err:.3e}")),
        ],
    }
}

pub fn cardano_row(report: &CardanoReport) -> Row {
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("q1", format!("{:.12}", report.q1.re)),
            (
                "q2",
                format!("{:.12}{:+.12}i", report.q2.re, report.q2.im),
            ),
            (
                "q3",
                format!("{:.12}{:+.12}i", report.q3.re, report.q3.im),
            ),
            ("cubic_ok", report.cubic_ok.to_string()),
            (
                "product",
                format!("{:.12}{:+.12}i", report.product.re, report.product.im),
            ),
            (
                "product_matches_plus_one",
                report.product_matches_plus_one.to_string(),
            ),
            (
                "product_matches_minus_one",
                report.product_matches_minus_one.to_string(),
            ),
            ("dominant_gap", format!("{:.3e}", report.dominant_gap)),
        ],
    }
}

pub fn solution_space_row(report: &SolutionSpaceReport) -> Row {
    Row {
        json: serde_json::to_value(report).unwrap(),
        cells: vec![
            ("order", report.order.to_string()),
            ("trials", report.trials.to_string()),
            ("horizon", report.horizon.to_string()),
            ("scaling_ok", report.scaling_ok.to_string()),
            ("addition_ok", report.addition_ok.to_string()),
        ],
    }
}

/// Uniform per-check row for verify-all.
pub fn check_row(
    module: &str,
    check: &str,
    instances: usize,
    violations: usize,
    indeterminate: usize,
    detail: String,
) -> Row {
    Row {
        json: json!({
            "module": module,
            "check": check,
            "instances": instances,
            "violations": violations,
            "indeterminate": indeterminate,
            "detail": detail,
        }),
        cells: vec![
            ("module", module.to_string()),
            ("check", check.to_string()),
            ("instances", instances.to_string()),
            ("violations", violations.to_string()),
            ("indeterminate", indeterminate.to_string()),
            ("detail", detail),
        ],
    }
}
