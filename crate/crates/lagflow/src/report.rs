//! JSON and CSV shapes for everything the CLI emits.

use std::fmt::Write as _;

use lagflow_core::flow::{FlowTrace, LocalizationReport, TheoremCheck};
use lagflow_core::orthocheck::MomentValue;
use lagflow_core::ratpoly::approx_decimal;
use lagflow_core::{Poly, Rational, RootCertificate};
use serde::{Deserialize, Serialize};

use crate::literal::{rational_string, PolyJson};

/// Significant digits of every `approx` field.
pub const APPROX_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub real_rooted: bool,
    pub simple: bool,
    pub intervals: Vec<[String; 2]>,
}

impl From<&RootCertificate> for CertificateJson {
    fn from(c: &RootCertificate) -> Self {
        CertificateJson {
            degree: c.degree,
            distinct_real_roots: c.distinct_real_roots,
            real_rooted: c.is_real_rooted,
            simple: c.is_simple,
            intervals: c
                .intervals
                .iter()
                .map(|iv| [rational_string(&iv.lo), rational_string(&iv.hi)])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentJson {
    pub coeff: String,
    pub base: String,
}

impl From<&MomentValue> for MomentJson {
    fn from(m: &MomentValue) -> Self {
        MomentJson {
            coeff: rational_string(&m.coeff),
            base: m.base.as_str().to_string(),
        }
    }
}

/// Isolating interval with its approximate midpoint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub approx: String,
}

impl IntervalJson {
    pub fn new(lo: &Rational, hi: &Rational) -> Self {
        let mid = (lo + hi) / Rational::from_integer(2.into());
        IntervalJson {
            lo: rational_string(lo),
            hi: rational_string(hi),
            approx: approx_decimal(&mid, APPROX_DIGITS),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremJson {
    pub alpha: String,
    pub input: PolyJson,
    pub transformed: PolyJson,
    pub certificate: CertificateJson,
    pub passed: bool,
}

impl TheoremJson {
    pub fn new(alpha: &Rational, input: &Poly, check: &TheoremCheck) -> Self {
        TheoremJson {
            alpha: rational_string(alpha),
            input: input.into(),
            transformed: (&check.transformed).into(),
            certificate: (&check.certificate).into(),
            passed: check.passed,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalizationJson {
    pub k: usize,
    pub step: String,
    pub window_lo: String,
    pub window_hi: String,
    pub roots_in_window: usize,
    pub passed: bool,
    pub radius_used: String,
    pub radius_approx: String,
    pub degenerate_radius: bool,
}

impl LocalizationJson {
    pub fn new(step: &Rational, r: &LocalizationReport) -> Self {
        LocalizationJson {
            k: r.k,
            step: rational_string(step),
            window_lo: rational_string(&r.window_lo),
            window_hi: rational_string(&r.window_hi),
            roots_in_window: r.roots_in_window,
            passed: r.passed,
            radius_used: rational_string(&r.radius_used),
            radius_approx: approx_decimal(&r.radius_used, APPROX_DIGITS),
            degenerate_radius: r.degenerate_radius,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceSampleJson {
    pub h: String,
    pub flowed: PolyJson,
    pub certificate: CertificateJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceJson {
    pub alpha: String,
    pub input: PolyJson,
    pub interior_simple: bool,
    pub samples: Vec<TraceSampleJson>,
}

impl From<&FlowTrace> for TraceJson {
    fn from(t: &FlowTrace) -> Self {
        TraceJson {
            alpha: rational_string(t.alpha.value()),
            input: (&t.input).into(),
            interior_simple: t.interior_simple(),
            samples: t
                .samples
                .iter()
                .map(|s| TraceSampleJson {
                    h: rational_string(&s.h),
                    flowed: (&s.flowed).into(),
                    certificate: (&s.certificate).into(),
                })
                .collect(),
        }
    }
}

pub const TRACE_CSV_HEADER: &str = "h,root_index,interval_lo,interval_hi,approx";

/// One row per isolated root per sample.
pub fn trace_csv(t: &FlowTrace) -> String {
    let mut out = String::from(TRACE_CSV_HEADER);
    out.push('\n');
    for s in &t.samples {
        for (i, iv) in s.certificate.intervals.iter().enumerate() {
            writeln!(
                out,
                "{},{},{},{},{}",
                rational_string(&s.h),
                i,
                rational_string(&iv.lo),
                rational_string(&iv.hi),
                approx_decimal(&iv.midpoint(), APPROX_DIGITS)
            )
            .expect("writing to a String");
        }
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use lagflow_core::flow::flow_trace;
    use lagflow_core::ratpoly::{int, rat};
    use lagflow_core::realroot::certify;
    use lagflow_core::AlphaParam;

    #[test]
    fn certificate_keys() {
        let c = certify(&Poly::from_ints(&[4, 4, 1])).unwrap();
        let v: serde_json::Value = serde_json::to_value(CertificateJson::from(&c)).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<_> = obj.keys().map(String::as_str).collect();
        assert_eq!(keys, ["degree", "distinct_real_roots", "intervals", "real_rooted", "simple"]);
        assert_eq!(obj["real_rooted"], true);
        assert_eq!(obj["simple"], false);
        assert_eq!(obj["intervals"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn moment_shape() {
        let m = lagflow_core::orthocheck::laguerre_inner(2, 2, &AlphaParam::new(rat(1, 2)).unwrap());
        let s = serde_json::to_string(&MomentJson::from(&m)).unwrap();
        assert_eq!(s, r#"{"coeff":"15/8","base":"gamma_alpha_plus_1"}"#);
    }

    #[test]
    fn csv_rows() {
        let f = Poly::from_roots(&[(int(2), 1), (int(5), 1)], int(1));
        let t = flow_trace(&f, &AlphaParam::zero(), &[int(0), rat(1, 2)]).unwrap();
        let csv = trace_csv(&t);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], TRACE_CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("0,0,"));
        let approx: f64 = lines[1].rsplit(',').next().unwrap().parse().unwrap();
        assert!((approx - 2.0).abs() < 1e-6);
        assert!(lines[4].starts_with("1/2,1,"));
    }
}
