//! Plain-text summary of a run report.

use std::fmt::Write;

use poncelet_core::sweep::{InvariantReport, Mean, RunReport, Verdict};

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Invariant => "invariant",
        Verdict::NotInvariant => "not_invariant",
        Verdict::Degenerate => "degenerate",
    }
}

fn mean(m: &Mean) -> String {
    match m {
        Mean::Scalar(v) => format!("{v:.10}"),
        Mean::Components(c) => {
            let parts: Vec<_> = c.iter().map(|v| format!("{v:.6}")).collect();
            format!("({})", parts.join(", "))
        }
    }
}

fn row(r: &InvariantReport) -> [String; 9] {
    [
        r.id.clone(),
        r.config.n.to_string(),
        format!("{}/{}", r.config.a, r.config.b),
        r.anchor.clone().unwrap_or_else(|| "-".into()),
        verdict(r.verdict).into(),
        mean(&r.mean),
        format!("{:.2e}", r.max_rel_dev),
        r.closed_form_residual
            .map_or("-".into(), |x| format!("{x:.2e}")),
        if r.flags.is_empty() {
            String::new()
        } else {
            "flagged".into()
        },
    ]
}

/// Renders the table. With `failing_only`, invariant rows are left out.
pub fn render(report: &RunReport, failing_only: bool) -> String {
    const HEAD: [&str; 9] = [
        "id",
        "N",
        "a/b",
        "M",
        "verdict",
        "mean",
        "max_rel_dev",
        "cf_resid",
        "",
    ];
    let rows: Vec<_> = report
        .reports
        .iter()
        .filter(|r| !failing_only || r.verdict != Verdict::Invariant)
        .map(row)
        .collect();
    let mut width = HEAD.map(str::len);
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<_> = cells
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, &HEAD.map(String::from));
    for r in &rows {
        line(&mut out, r);
    }
    let count = |v| report.reports.iter().filter(|r| r.verdict == v).count();
    let flagged = report
        .reports
        .iter()
        .filter(|r| !r.flags.is_empty())
        .count();
    let _ = writeln!(
        out,
        "\nrun {}: {} reports, {} invariant, {} not_invariant, {} degenerate, {} flagged, {} failed cells",
        &report.run_id[..report.run_id.len().min(12)],
        report.reports.len(),
        count(Verdict::Invariant),
        count(Verdict::NotInvariant),
        count(Verdict::Degenerate),
        flagged,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(
            out,
            "failed: N={} a={} b={} {}: {}",
            f.config.n,
            f.config.a,
            f.config.b,
            f.id.as_deref().unwrap_or("-"),
            f.message
        );
    }
    let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
    out
}
