//! Report rendering: deterministic JSON (fixed field order,
//! 17-significant-digit round-trip floats), CSV with identical numeric
//! strings, and a human-oriented text form.

use clap::ValueEnum;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One computed point. Fields are `None` when the command does not produce
/// them or the point is not realizable.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub n: u32,
    pub a: f64,
    pub c: f64,
    pub rel_tol: f64,
    pub exists: Option<bool>,
    pub margin: Option<f64>,
    pub c0: Option<f64>,
    pub r: Option<f64>,
    pub h: Option<f64>,
    pub angle_a: Option<f64>,
    pub angle_c: Option<f64>,
    pub angle_excess: Option<f64>,
    pub volume: Option<f64>,
    pub abs_error_estimate: Option<f64>,
    pub evaluations: Option<u64>,
}

impl Report {
    pub fn new(command: &'static str, n: u32, a: f64, c: f64, rel_tol: f64) -> Self {
        Self {
            command,
            n,
            a,
            c,
            rel_tol,
            exists: None,
            margin: None,
            c0: None,
            r: None,
            h: None,
            angle_a: None,
            angle_c: None,
            angle_excess: None,
            volume: None,
            abs_error_estimate: None,
            evaluations: None,
        }
    }

    pub fn emit(&self, format: Format, degrees: bool) {
        match format {
            Format::Json => println!("{}", self.to_json(true)),
            Format::Csv => {
                println!("{}", csv_header());
                println!("{}", self.to_csv_row());
            }
            Format::Text => print!("{}", self.to_text(degrees)),
        }
    }

    fn to_json(&self, envelope: bool) -> String {
        let mut out = String::from("{");
        if envelope {
            push_field(&mut out, "schema_version", SCHEMA_VERSION.to_string());
            push_field(&mut out, "command", format!("\"{}\"", self.command));
        }
        let inputs = format!(
            "{{\"n\":{},\"a\":{},\"c\":{},\"rel_tol\":{}}}",
            self.n,
            fmt_f64(self.a),
            fmt_f64(self.c),
            fmt_f64(self.rel_tol)
        );
        push_field(&mut out, "inputs", inputs);
        push_field(&mut out, "exists", json_opt_bool(self.exists));
        push_field(&mut out, "margin", json_opt_f64(self.margin));
        push_field(&mut out, "c0", json_opt_f64(self.c0));
        push_field(&mut out, "r", json_opt_f64(self.r));
        push_field(&mut out, "h", json_opt_f64(self.h));
        push_field(&mut out, "A", json_opt_f64(self.angle_a));
        push_field(&mut out, "C", json_opt_f64(self.angle_c));
        push_field(&mut out, "angle_excess", json_opt_f64(self.angle_excess));
        push_field(&mut out, "volume", json_opt_f64(self.volume));
        push_field(&mut out, "abs_error_estimate", json_opt_f64(self.abs_error_estimate));
        push_field(&mut out, "evaluations", self.evaluations.map_or("null".into(), |e| e.to_string()));
        out.push('}');
        out
    }

    fn to_csv_row(&self) -> String {
        [
            self.n.to_string(),
            fmt_f64(self.a),
            fmt_f64(self.c),
            self.exists.map_or(String::new(), |e| e.to_string()),
            csv_opt_f64(self.margin),
            csv_opt_f64(self.c0),
            csv_opt_f64(self.r),
            csv_opt_f64(self.h),
            csv_opt_f64(self.angle_a),
            csv_opt_f64(self.angle_c),
            csv_opt_f64(self.angle_excess),
            csv_opt_f64(self.volume),
            csv_opt_f64(self.abs_error_estimate),
            self.evaluations.map_or(String::new(), |e| e.to_string()),
        ]
        .join(",")
    }

    fn to_text(&self, degrees: bool) -> String {
        let mut out = String::new();
        let angle = |x: f64| if degrees { x.to_degrees() } else { x };
        let unit = if degrees { "deg" } else { "rad" };
        out.push_str(&format!("n: {}\na: {}\nc: {}\n", self.n, self.a, self.c));
        if let Some(e) = self.exists {
            out.push_str(&format!("exists: {e}\n"));
        }
        if let Some(m) = self.margin {
            out.push_str(&format!("margin: {m}\n"));
        }
        if let Some(c0) = self.c0 {
            out.push_str(&format!("c0: {c0}\n"));
        }
        if let Some(r) = self.r {
            out.push_str(&format!("r: {r}\n"));
        }
        if let Some(h) = self.h {
            out.push_str(&format!("h: {h}\n"));
        }
        if let Some(a) = self.angle_a {
            out.push_str(&format!("A ({unit}): {}\n", angle(a)));
        }
        if let Some(c) = self.angle_c {
            out.push_str(&format!("C ({unit}): {}\n", angle(c)));
        }
        if let Some(x) = self.angle_excess {
            out.push_str(&format!("angle excess 2A+2C-2pi ({unit}): {}\n", angle(x)));
        }
        if let Some(v) = self.volume {
            out.push_str(&format!("volume: {v}\n"));
        }
        if let Some(e) = self.abs_error_estimate {
            out.push_str(&format!("abs error estimate: {e}\n"));
        }
        if let Some(e) = self.evaluations {
            out.push_str(&format!("evaluations: {e}\n"));
        }
        out
    }
}

pub fn emit_sweep(rows: &[Report], format: Format) {
    match format {
        Format::Json => {
            let body: Vec<String> = rows.iter().map(|r| r.to_json(false)).collect();
            println!(
                "{{\"schema_version\":{SCHEMA_VERSION},\"command\":\"sweep\",\"rows\":[{}]}}",
                body.join(",")
            );
        }
        // Text has no sweep layout of its own; CSV is the canonical table.
        Format::Csv | Format::Text => {
            println!("{}", csv_header());
            for row in rows {
                println!("{}", row.to_csv_row());
            }
        }
    }
}

fn csv_header() -> &'static str {
    "n,a,c,realizable,margin,c0,r,h,A,C,angle_excess,volume,abs_error_estimate,evaluations"
}

/// Round-trip-exact decimal form with 17 significant digits, identical in
/// JSON and CSV output.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn push_field(out: &mut String, key: &str, value: String) {
    if out.len() > 1 {
        out.push(',');
    }
    out.push('"');
    out.push_str(key);
    out.push_str("\":");
    out.push_str(&value);
}

fn json_opt_f64(v: Option<f64>) -> String {
    v.map_or_else(|| "null".to_string(), fmt_f64)
}

fn csv_opt_f64(v: Option<f64>) -> String {
    v.map_or_else(String::new, fmt_f64)
}

fn json_opt_bool(v: Option<bool>) -> String {
    v.map_or_else(|| "null".to_string(), |b| b.to_string())
}
