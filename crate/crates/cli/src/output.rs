//! Result payloads and the three output formats.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use symprod::{ClassificationReport, NonIsoCertificate, Partition, PoincarePolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// Top-level JSON object. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub command: String,
    pub input: serde_json::Value,
    pub result: T,
    pub version: String,
}

impl<T: Serialize + Render> Envelope<T> {
    pub fn new(command: &str, input: serde_json::Value, result: T, version: &str) -> Self {
        Envelope { command: command.to_string(), input, result, version: version.to_string() }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
            Format::Human => Ok(self.result.human()),
            Format::Csv => {
                let (header, rows) = self.result.table();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).map_err(|e| e.to_string())?;
                for row in rows {
                    w.write_record(&row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

pub trait Render {
    fn human(&self) -> String;
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
}

fn join_parts(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionsResult {
    pub n: u32,
    #[serde(with = "symprod::bigint_json")]
    pub count: num_bigint::BigUint,
    pub partitions: Vec<Partition>,
}

impl Render for PartitionsResult {
    fn human(&self) -> String {
        let mut s = format!("p({}) = {}\n", self.n, self.count);
        for (i, p) in self.partitions.iter().enumerate() {
            let _ = writeln!(s, "{:>6}  {p}", i);
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .partitions
            .iter()
            .enumerate()
            .map(|(i, p)| vec![i.to_string(), p.len().to_string(), join_parts(p)])
            .collect();
        (vec!["index", "length", "parts"], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiValue {
    pub r: i64,
    #[serde(with = "symprod::bigint_json")]
    pub betti: num_bigint::BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiResult {
    pub n: u32,
    pub genus: u32,
    pub values: Vec<BettiValue>,
}

impl Render for BettiResult {
    fn human(&self) -> String {
        let mut s = format!("Sym^{} of a genus {} curve\n", self.n, self.genus);
        for v in &self.values {
            let _ = writeln!(s, "  B_{:<4} {}", v.r, v.betti);
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .values
            .iter()
            .map(|v| vec![self.n.to_string(), self.genus.to_string(), v.r.to_string(), v.betti.to_string()])
            .collect();
        (vec!["n", "genus", "r", "betti"], rows)
    }
}

impl Render for PoincarePolynomial {
    fn human(&self) -> String {
        let coeffs: Vec<String> = self.coeffs().iter().map(ToString::to_string).collect();
        format!("P(x) = {self}\ncoefficients: [{}]\n", coeffs.join(", "))
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect();
        (vec!["degree", "coefficient"], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishResult {
    pub a: Partition,
    pub b: Partition,
    pub genus: u32,
    pub certificate: NonIsoCertificate,
}

/// (field, value-for-a, value-for-b) rows describing a certificate.
fn certificate_rows(c: &NonIsoCertificate) -> Vec<(&'static str, String, String)> {
    match c {
        NonIsoCertificate::EqualPartitions => vec![],
        NonIsoCertificate::FirstBettiDiffers { a, b } => vec![("b1", a.to_string(), b.to_string())],
        NonIsoCertificate::BettiDiffers { degree, smallest_part, a, b } => vec![
            ("degree", degree.to_string(), degree.to_string()),
            ("smallest_part", smallest_part.to_string(), smallest_part.to_string()),
            ("betti", a.to_string(), b.to_string()),
        ],
        NonIsoCertificate::FiberMultiproj { smallest_part, dims_a, dims_b } => vec![
            ("smallest_part", smallest_part.to_string(), smallest_part.to_string()),
            ("fiber_dims", join(dims_a), join(dims_b)),
        ],
        NonIsoCertificate::PicardRankDiffers { a, b } => vec![("picard_rank", a.to_string(), b.to_string())],
        NonIsoCertificate::PolynomialDiffers { space, degree, a, b } => vec![
            ("space", format!("{space:?}"), format!("{space:?}")),
            ("degree", degree.to_string(), degree.to_string()),
            ("coefficient", a.to_string(), b.to_string()),
        ],
    }
}

impl Render for DistinguishResult {
    fn human(&self) -> String {
        let mut s = format!("{} vs {} at genus {}: {}\n", self.a, self.b, self.genus, self.certificate.kind());
        for (field, a, b) in certificate_rows(&self.certificate) {
            if a == b {
                let _ = writeln!(s, "  {field}: {a}");
            } else {
                let _ = writeln!(s, "  {field}: {a} vs {b}");
            }
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let kind = self.certificate.kind().to_string();
        let rows = certificate_rows(&self.certificate)
            .into_iter()
            .map(|(f, a, b)| vec![kind.clone(), f.to_string(), a, b])
            .collect();
        (vec!["kind", "field", "a", "b"], rows)
    }
}

/// One-line summary of a certificate's witness for tables.
fn witness(c: &NonIsoCertificate) -> (String, String, String) {
    match c {
        NonIsoCertificate::EqualPartitions => (String::new(), String::new(), String::new()),
        NonIsoCertificate::FirstBettiDiffers { a, b } => ("1".into(), a.to_string(), b.to_string()),
        NonIsoCertificate::BettiDiffers { degree, a, b, .. }
        | NonIsoCertificate::PolynomialDiffers { degree, a, b, .. } => (degree.to_string(), a.to_string(), b.to_string()),
        NonIsoCertificate::FiberMultiproj { dims_a, dims_b, .. } => (String::new(), join(dims_a), join(dims_b)),
        NonIsoCertificate::PicardRankDiffers { a, b } => (String::new(), a.to_string(), b.to_string()),
    }
}

impl Render for ClassificationReport {
    fn human(&self) -> String {
        let mut s = format!(
            "n = {}, genus = {}: {} pairwise non-isomorphic Hilbert schemes\n",
            self.n, self.genus, self.count
        );
        for (i, p) in self.partitions.iter().enumerate() {
            let _ = writeln!(s, "{:>6}  {p}", i);
        }
        if !self.certificates.is_empty() {
            s.push_str("certificates:\n");
        }
        for pc in &self.certificates {
            let (deg, a, b) = witness(&pc.certificate);
            let at = if deg.is_empty() { String::new() } else { format!(" at degree {deg}") };
            let _ = writeln!(s, "  {} vs {}: {}{at} ({a} vs {b})", pc.i, pc.j, pc.certificate.kind());
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .certificates
            .iter()
            .map(|pc| {
                let (deg, a, b) = witness(&pc.certificate);
                vec![
                    pc.i.to_string(),
                    pc.j.to_string(),
                    join_parts(&self.partitions[pc.i]),
                    join_parts(&self.partitions[pc.j]),
                    pc.certificate.kind().to_string(),
                    deg,
                    a,
                    b,
                ]
            })
            .collect();
        (vec!["i", "j", "parts_i", "parts_j", "kind", "degree", "a", "b"], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeResult {
    pub rank: u32,
    pub degree: i64,
    pub numerator: i64,
    pub denominator: u32,
    pub integral: bool,
}

impl Render for SlopeResult {
    fn human(&self) -> String {
        let kind = if self.integral { "integral" } else { "non-integral" };
        format!("slope of ({}, {}) = {}/{} ({kind})\n", self.rank, self.degree, self.numerator, self.denominator)
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![
            self.rank.to_string(),
            self.degree.to_string(),
            self.numerator.to_string(),
            self.denominator.to_string(),
            self.integral.to_string(),
        ];
        (vec!["rank", "degree", "numerator", "denominator", "integral"], vec![row])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdsResult {
    pub rank: u32,
    pub degree: i64,
    pub integral_slope: bool,
    /// Least deg(D) from which every constituent has the weak point property.
    pub wpp_threshold: Option<u64>,
    pub wpp_torsion_degree: Option<i128>,
    /// Least deg(D) from which every constituent is a positive symmetric power.
    pub dp_threshold: Option<u64>,
    pub dp_torsion_degree: Option<i128>,
}

impl Render for ThresholdsResult {
    fn human(&self) -> String {
        let mut s = format!("({}, {})-divisors\n", self.rank, self.degree);
        match self.wpp_threshold {
            Some(d) => {
                let _ = writeln!(
                    s,
                    "  weak point property for deg D >= {d} (torsion degree {})",
                    opt(&self.wpp_torsion_degree)
                );
            }
            None => s.push_str("  weak point property: slope not integral\n"),
        }
        match self.dp_threshold {
            Some(d) => {
                let _ = writeln!(
                    s,
                    "  diagonal property for deg D >= {d} (torsion degree {})",
                    opt(&self.dp_torsion_degree)
                );
            }
            None => s.push_str("  diagonal property: only known in rank 1\n"),
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![
            self.rank.to_string(),
            self.degree.to_string(),
            self.integral_slope.to_string(),
            opt(&self.wpp_threshold),
            opt(&self.wpp_torsion_degree),
            opt(&self.dp_threshold),
            opt(&self.dp_torsion_degree),
        ];
        (
            vec![
                "rank",
                "degree",
                "integral_slope",
                "wpp_threshold",
                "wpp_torsion_degree",
                "dp_threshold",
                "dp_torsion_degree",
            ],
            vec![row],
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotDegResult {
    pub rank: u32,
    pub n: i64,
    pub deg_d: u64,
    pub torsion_degree: i128,
    pub nonempty: bool,
    pub wpp_hypothesis: bool,
    pub has_dp: bool,
}

impl Render for QuotDegResult {
    fn human(&self) -> String {
        format!(
            "Q^{{{},{}}}(D), deg D = {}: torsion degree {}\n  nonempty: {}\n  weak point property hypotheses: {}\n  diagonal property: {}\n",
            self.rank, self.n, self.deg_d, self.torsion_degree, self.nonempty, self.wpp_hypothesis, self.has_dp
        )
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![
            self.rank.to_string(),
            self.n.to_string(),
            self.deg_d.to_string(),
            self.torsion_degree.to_string(),
            self.nonempty.to_string(),
            self.wpp_hypothesis.to_string(),
            self.has_dp.to_string(),
        ];
        (vec!["rank", "n", "deg_d", "torsion_degree", "nonempty", "wpp_hypothesis", "has_dp"], vec![row])
    }
}
