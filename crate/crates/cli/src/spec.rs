//! Ring-spec ingestion: inline token grammar and JSON spec files, both
//! normalized into one structure that the commands build from and that the
//! report fingerprint is computed over.

use canonica_core::algebra::FieldKind;
use canonica_core::builders::{
    build_chain, build_det_ring, Chain, ChainStepSpec, DetRing,
};
use canonica_core::algebra::{parse_polynomial, MonomialOrder, PolyRing};
use canonica_core::homalg::QuotientRing;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

/// Field selector as written in spec files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    Prime { p: u64 },
    Rationals,
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<FieldKind, CliError> {
        match self {
            FieldSpec::Prime { p } => FieldKind::prime(*p)
                .map_err(|e| CliError::Parameter(e.to_string())),
            FieldSpec::Rationals => Ok(FieldKind::Rationals),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StepSpec {
    TrivialExt { q: usize },
    PowerQuotient { ys: Vec<String>, exponent: usize },
    DetBlock { m: usize, n: usize, r: usize },
}

impl StepSpec {
    fn to_builder(&self) -> ChainStepSpec {
        match self {
            StepSpec::TrivialExt { q } => ChainStepSpec::TrivialExt { q: *q },
            StepSpec::PowerQuotient { ys, exponent } => ChainStepSpec::PowerQuotient {
                ys: ys.clone(),
                exponent: *exponent,
            },
            StepSpec::DetBlock { m, n, r } => ChainStepSpec::DetBlock {
                m: *m,
                n: *n,
                r: *r,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Determinantal {
        m: usize,
        n: usize,
        r: usize,
    },
    Chain {
        #[serde(default)]
        vars: Vec<String>,
        steps: Vec<StepSpec>,
    },
    Polynomial {
        vars: Vec<String>,
        relations: Vec<String>,
    },
}

/// A fully normalized ring spec: what the commands build from, and the
/// exact structure the spec fingerprint hashes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpecFile {
    pub field: FieldSpec,
    pub construction: ConstructionSpec,
}

impl RingSpecFile {
    /// Hash of the canonical serialized form; stable across the inline and
    /// file spellings of the same spec.
    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_string(self).expect("spec serializes");
        let mut h = Sha256::new();
        h.update(canonical.as_bytes());
        format!("sha256:{:x}", h.finalize())
    }

    /// Short human-readable description used in summaries.
    pub fn describe(&self) -> String {
        let field = match &self.field {
            FieldSpec::Prime { p } => format!("F_{p}"),
            FieldSpec::Rationals => "QQ".to_string(),
        };
        let cons = match &self.construction {
            ConstructionSpec::Determinantal { m, n, r } => format!("det {m} {n} {r}"),
            ConstructionSpec::Chain { steps, .. } => {
                let parts: Vec<String> = steps
                    .iter()
                    .map(|s| match s {
                        StepSpec::TrivialExt { q } => format!("triv {q}"),
                        StepSpec::PowerQuotient { ys, exponent } => {
                            format!("powq ({}) {exponent}", ys.join(","))
                        }
                        StepSpec::DetBlock { m, n, r } => format!("det {m} {n} {r}"),
                    })
                    .collect();
                format!("chain [{}]", parts.join(", "))
            }
            ConstructionSpec::Polynomial { vars, relations } => {
                format!("poly [{}] / ({})", vars.join(","), relations.join(", "))
            }
        };
        format!("{cons} over {field}")
    }
}

/// A built ring of whichever construction the spec named.
pub enum BuiltRing {
    Det(DetRing),
    Chain(Chain),
    Poly(QuotientRing),
}

impl BuiltRing {
    pub fn quotient_ring(&self) -> &QuotientRing {
        match self {
            BuiltRing::Det(d) => d.ring(),
            BuiltRing::Chain(c) => c.final_ring(),
            BuiltRing::Poly(q) => q,
        }
    }
}

pub fn build_ring(spec: &RingSpecFile) -> Result<BuiltRing, CliError> {
    let field = spec.field.to_field()?;
    match &spec.construction {
        ConstructionSpec::Determinantal { m, n, r } => {
            let det = build_det_ring(field, *m, *n, *r).map_err(CliError::engine)?;
            Ok(BuiltRing::Det(det))
        }
        ConstructionSpec::Chain { vars, steps } => {
            let specs: Vec<ChainStepSpec> = steps.iter().map(StepSpec::to_builder).collect();
            let chain = build_chain(field, vars, &specs).map_err(CliError::engine)?;
            Ok(BuiltRing::Chain(chain))
        }
        ConstructionSpec::Polynomial { vars, relations } => {
            let ring = PolyRing::new(field, vars.clone(), MonomialOrder::GrevLex)
                .map_err(CliError::engine)?;
            let rels = relations
                .iter()
                .map(|s| parse_polynomial(&ring, s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Schema(format!("relation does not parse: {e}")))?;
            let q = QuotientRing::new(ring, rels).map_err(CliError::engine)?;
            Ok(BuiltRing::Poly(q))
        }
    }
}

/// Parses the positional spec arguments: a single argument naming an
/// existing file is read as a JSON spec; anything else is the inline token
/// grammar (`det M N R` or `chain [STEP, ...]`).
pub fn parse_spec_args(args: &[String], field_p: Option<u64>) -> Result<RingSpecFile, CliError> {
    if args.is_empty() {
        return Err(CliError::Schema("no ring spec given".into()));
    }
    if args.len() == 1 && std::path::Path::new(&args[0]).is_file() {
        let text = std::fs::read_to_string(&args[0])
            .map_err(|e| CliError::Schema(format!("cannot read spec file: {e}")))?;
        let spec: RingSpecFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Schema(format!("spec file does not validate: {e}")))?;
        if field_p.is_some() {
            return Err(CliError::Parameter(
                "--field-p conflicts with the field recorded in the spec file".into(),
            ));
        }
        validate(&spec)?;
        return Ok(spec);
    }
    let field = match field_p {
        Some(p) => FieldSpec::Prime { p },
        None => FieldSpec::Prime { p: 32003 },
    };
    let construction = parse_inline(&args.join(" "))?;
    let spec = RingSpecFile {
        field,
        construction,
    };
    validate(&spec)?;
    Ok(spec)
}

fn validate(spec: &RingSpecFile) -> Result<(), CliError> {
    match &spec.construction {
        ConstructionSpec::Determinantal { m, n, r } => {
            if *m == 0 || *n == 0 {
                return Err(CliError::Parameter(
                    "matrix dimensions must be positive".into(),
                ));
            }
            if *r >= (*m).min(*n) {
                return Err(CliError::Parameter(format!(
                    "minor bound r = {r} must satisfy r < min(m, n) = {}",
                    (*m).min(*n)
                )));
            }
        }
        ConstructionSpec::Chain { steps, .. } => {
            if steps.is_empty() {
                return Err(CliError::Parameter("chain needs at least one step".into()));
            }
            for (i, s) in steps.iter().enumerate() {
                match s {
                    StepSpec::TrivialExt { q } if *q == 0 => {
                        return Err(CliError::Parameter("trivial extension needs q >= 1".into()))
                    }
                    StepSpec::PowerQuotient { ys, exponent } => {
                        if ys.is_empty() || *exponent == 0 {
                            return Err(CliError::Parameter(
                                "power quotient needs elements and exponent >= 1".into(),
                            ));
                        }
                    }
                    StepSpec::DetBlock { .. } if i != 0 => {
                        return Err(CliError::Parameter(
                            "a determinantal block may only start a chain".into(),
                        ));
                    }
                    _ => {}
                }
            }
        }
        ConstructionSpec::Polynomial { vars, .. } => {
            if vars.is_empty() {
                return Err(CliError::Parameter(
                    "polynomial construction needs at least one variable".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Lexes the inline grammar. Tokens: words, integers, and the punctuation
/// `[ ] ( ) ,`.
fn lex(input: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in input.chars() {
        match ch {
            '[' | ']' | '(' | ')' | ',' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

struct Cursor {
    toks: Vec<String>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&str> {
        self.toks.get(self.pos).map(|s| s.as_str())
    }
    fn next(&mut self) -> Result<&str, CliError> {
        let t = self
            .toks
            .get(self.pos)
            .ok_or_else(|| CliError::Schema("unexpected end of ring spec".into()))?;
        self.pos += 1;
        Ok(t.as_str())
    }
    fn expect(&mut self, want: &str) -> Result<(), CliError> {
        let t = self.next()?;
        if t != want {
            return Err(CliError::Schema(format!(
                "expected `{want}` in ring spec, found `{t}`"
            )));
        }
        Ok(())
    }
    fn number(&mut self) -> Result<usize, CliError> {
        let t = self.next()?;
        t.parse()
            .map_err(|_| CliError::Schema(format!("expected a number in ring spec, found `{t}`")))
    }
}

fn parse_inline(input: &str) -> Result<ConstructionSpec, CliError> {
    let mut cur = Cursor {
        toks: lex(input),
        pos: 0,
    };
    let head = cur.next()?.to_string();
    let spec = match head.as_str() {
        "det" => {
            let m = cur.number()?;
            let n = cur.number()?;
            let r = cur.number()?;
            ConstructionSpec::Determinantal { m, n, r }
        }
        "chain" => {
            cur.expect("[")?;
            let mut steps = Vec::new();
            loop {
                steps.push(parse_step(&mut cur)?);
                match cur.next()? {
                    "," => continue,
                    "]" => break,
                    t => {
                        return Err(CliError::Schema(format!(
                            "expected `,` or `]` in chain spec, found `{t}`"
                        )))
                    }
                }
            }
            // Power quotients over a bare base need ambient variables; the
            // inline form infers them from the elements named.
            let vars = infer_chain_vars(&steps);
            ConstructionSpec::Chain { vars, steps }
        }
        other => {
            return Err(CliError::Schema(format!(
                "unknown construction `{other}` (expected `det` or `chain`)"
            )))
        }
    };
    if cur.peek().is_some() {
        return Err(CliError::Schema(format!(
            "trailing tokens after ring spec: `{}`",
            cur.toks[cur.pos..].join(" ")
        )));
    }
    Ok(spec)
}

fn parse_step(cur: &mut Cursor) -> Result<StepSpec, CliError> {
    let head = cur.next()?.to_string();
    match head.as_str() {
        "triv" => Ok(StepSpec::TrivialExt { q: cur.number()? }),
        "powq" => {
            cur.expect("(")?;
            let mut ys = Vec::new();
            loop {
                let t = cur.next()?.to_string();
                if t == ")" {
                    break;
                }
                if t == "," {
                    continue;
                }
                ys.push(t);
            }
            let exponent = cur.number()?;
            Ok(StepSpec::PowerQuotient { ys, exponent })
        }
        "det" => {
            let m = cur.number()?;
            let n = cur.number()?;
            let r = cur.number()?;
            Ok(StepSpec::DetBlock { m, n, r })
        }
        other => Err(CliError::Schema(format!(
            "unknown chain step `{other}` (expected `triv`, `powq`, or `det`)"
        ))),
    }
}

/// Variables a chain's base ring needs: the elements named by power
/// quotients, when those are simple variable names and no determinantal
/// block supplies the ambient ring.
fn infer_chain_vars(steps: &[StepSpec]) -> Vec<String> {
    if matches!(steps.first(), Some(StepSpec::DetBlock { .. })) {
        return Vec::new();
    }
    let mut vars: Vec<String> = Vec::new();
    for s in steps {
        if let StepSpec::PowerQuotient { ys, .. } = s {
            for y in ys {
                if y.chars().all(|c| c.is_alphanumeric() || c == '_') && !vars.contains(y) {
                    vars.push(y.clone());
                }
            }
        }
    }
    vars
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_det_spec_parses() {
        let spec = parse_spec_args(&["det".into(), "3".into(), "2".into(), "1".into()], None)
            .unwrap();
        assert_eq!(
            spec.construction,
            ConstructionSpec::Determinantal { m: 3, n: 2, r: 1 }
        );
        assert_eq!(spec.field, FieldSpec::Prime { p: 32003 });
    }

    #[test]
    fn inline_chain_specs_parse() {
        let spec = parse_spec_args(&["chain".into(), "[triv".into(), "2]".into()], None).unwrap();
        assert_eq!(
            spec.construction,
            ConstructionSpec::Chain {
                vars: vec![],
                steps: vec![StepSpec::TrivialExt { q: 2 }]
            }
        );
        let spec = parse_spec_args(
            &["chain".into(), "[powq".into(), "(y1,y2)".into(), "2]".into()],
            None,
        )
        .unwrap();
        assert_eq!(
            spec.construction,
            ConstructionSpec::Chain {
                vars: vec!["y1".into(), "y2".into()],
                steps: vec![StepSpec::PowerQuotient {
                    ys: vec!["y1".into(), "y2".into()],
                    exponent: 2
                }]
            }
        );
    }

    #[test]
    fn fingerprint_is_spelling_independent() {
        let a = parse_spec_args(&["det".into(), "3".into(), "2".into(), "1".into()], None)
            .unwrap();
        let b = parse_spec_args(
            &["det".into(), " 3".into(), "2 ".into(), "1".into()],
            None,
        )
        .unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        let c = parse_spec_args(&["det".into(), "3".into(), "2".into(), "1".into()], Some(7))
            .unwrap();
        assert_ne!(a.fingerprint(), c.fingerprint());
    }

    #[test]
    fn bad_specs_are_schema_errors() {
        assert!(matches!(
            parse_spec_args(&["frob".into(), "1".into()], None),
            Err(CliError::Schema(_))
        ));
        assert!(matches!(
            parse_spec_args(&["det".into(), "3".into(), "x".into(), "1".into()], None),
            Err(CliError::Schema(_))
        ));
    }

    #[test]
    fn out_of_range_parameters_are_parameter_errors() {
        assert!(matches!(
            parse_spec_args(
                &["det".into(), "2".into(), "3".into(), "3".into()],
                None
            ),
            Err(CliError::Parameter(_))
        ));
    }
}
