//! Report emission: JSON (one object per report), TAP (one test line per
//! (check, rank, point)), and a human table.

use glhat::checks::{CheckReport, CheckStatus};

use crate::config::Format;

pub fn render(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json => render_json(reports),
        Format::Tap => render_tap(reports),
        Format::Text => render_text(reports),
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn render_json(reports: &[CheckReport]) -> String {
    let mut out = String::from("[\n");
    for (idx, r) in reports.iter().enumerate() {
        let params = match (&r.eps1, &r.eps2) {
            (Some(e1), Some(e2)) => format!(
                "{{\"eps1\": \"{}\", \"eps2\": \"{}\"}}",
                json_escape(e1),
                json_escape(e2)
            ),
            _ => "null".to_owned(),
        };
        let compared = match r.compared_window {
            Some(w) => w.to_string(),
            None => "null".to_owned(),
        };
        let counterexample = match &r.counterexample {
            Some(c) => format!("\"{}\"", json_escape(c)),
            None => "null".to_owned(),
        };
        out.push_str(&format!(
            "  {{\"check_id\": \"{}\", \"n\": {}, \"params\": {}, \"status\": \"{}\", \"compared_window\": {}, \"runtime_ms\": {}, \"counterexample\": {}}}{}\n",
            json_escape(&r.check_id),
            r.n,
            params,
            r.status,
            compared,
            r.runtime_ms,
            counterexample,
            if idx + 1 == reports.len() { "" } else { "," }
        ));
    }
    out.push_str("]\n");
    out
}

fn point_label(r: &CheckReport) -> String {
    match (&r.eps1, &r.eps2) {
        (Some(e1), Some(e2)) => format!("eps1={e1} eps2={e2}"),
        _ => "no-params".to_owned(),
    }
}

fn render_tap(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    out.push_str("TAP version 14\n");
    out.push_str(&format!("1..{}\n", reports.len()));
    for (idx, r) in reports.iter().enumerate() {
        let desc = format!("{} n={} {}", r.check_id, r.n, point_label(r));
        match r.status {
            CheckStatus::Pass => out.push_str(&format!("ok {} - {desc}\n", idx + 1)),
            CheckStatus::Skipped => {
                let reason = r.counterexample.as_deref().unwrap_or("skipped");
                out.push_str(&format!("ok {} - {desc} # SKIP {reason}\n", idx + 1));
            }
            CheckStatus::Fail | CheckStatus::Error => {
                out.push_str(&format!("not ok {} - {desc}\n", idx + 1));
                if let Some(detail) = &r.counterexample {
                    for line in detail.lines() {
                        out.push_str(&format!("# {line}\n"));
                    }
                }
            }
        }
    }
    out
}

fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut skip = 0usize;
    let mut error = 0usize;
    for r in reports {
        match r.status {
            CheckStatus::Pass => pass += 1,
            CheckStatus::Fail => fail += 1,
            CheckStatus::Skipped => skip += 1,
            CheckStatus::Error => error += 1,
        }
        let window = match r.compared_window {
            Some(w) if w >= i64::MAX / 8 => " window=inf".to_owned(),
            Some(w) => format!(" window={w}"),
            None => String::new(),
        };
        out.push_str(&format!(
            "{:<7} {:<24} n={} {}{} [{} ms]\n",
            r.status.to_string(),
            r.check_id,
            r.n,
            point_label(r),
            window,
            r.runtime_ms,
        ));
        if !matches!(r.status, CheckStatus::Pass) {
            if let Some(detail) = &r.counterexample {
                out.push_str(&format!("        {detail}\n"));
            }
        }
    }
    out.push_str(&format!(
        "\n{} checks: {pass} passed, {fail} failed, {skip} skipped, {error} errors\n",
        reports.len()
    ));
    out
}

/// Exit code contract: zero exactly when nothing failed or errored.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    let bad = reports
        .iter()
        .any(|r| matches!(r.status, CheckStatus::Fail | CheckStatus::Error));
    i32::from(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: CheckStatus) -> CheckReport {
        CheckReport {
            check_id: "formula1".into(),
            n: 3,
            eps1: Some("1/2".into()),
            eps2: Some("1/3".into()),
            status,
            compared_window: Some(4),
            runtime_ms: 7,
            counterexample: match status {
                CheckStatus::Pass => None,
                _ => Some("a \"detail\" with\nnewline".into()),
            },
        }
    }

    #[test]
    fn json_is_escaped_and_well_formed() {
        let text = render_json(&[sample(CheckStatus::Pass), sample(CheckStatus::Fail)]);
        assert!(text.contains("\"check_id\": \"formula1\""));
        assert!(text.contains("\\\"detail\\\""));
        assert!(text.contains("\\n"));
        assert!(text.starts_with("[\n"));
        assert!(text.ends_with("]\n"));
    }

    #[test]
    fn tap_lines() {
        let text = render_tap(&[
            sample(CheckStatus::Pass),
            sample(CheckStatus::Skipped),
            sample(CheckStatus::Fail),
        ]);
        assert!(text.contains("ok 1 - formula1 n=3 eps1=1/2 eps2=1/3"));
        assert!(text.contains("# SKIP"));
        assert!(text.contains("not ok 3"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&[sample(CheckStatus::Pass)]), 0);
        assert_eq!(
            exit_code(&[sample(CheckStatus::Pass), sample(CheckStatus::Skipped)]),
            0
        );
        assert_eq!(exit_code(&[sample(CheckStatus::Fail)]), 1);
        assert_eq!(exit_code(&[sample(CheckStatus::Error)]), 1);
    }
}
