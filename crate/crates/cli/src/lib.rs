//! The `basex` command line. [`run`] takes the argument list and output streams so that
//! tests can drive it in-process.

use std::cmp::Ordering;
use std::ffi::OsString;
use std::io::{self, Write};

use basex_core::baseconv::{representative_with, ConvertOptions, DEFAULT_UNARY_CAP};
use basex_core::factor::{is_prime, FactorizationResult};
use basex_core::family::{Derivation, FamilyMember};
use basex_core::numeral::{format_signed, parse_signed, parse_strict, predecessor, successor};
use basex_core::{
    ascent, cohn_general_test, compare, digital_add, digital_divmod, digital_mul, digital_sub, factorize,
    factorize_with, gcic_test, is_member, monic_divmod, representative, representatives, to_base_x, variants,
    BaseXNumeral, Error, Polynomial,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "basex", version, about = "Base-x numerals for integer polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a polynomial as a base-x numeral
    Tobase {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Decode a base-x numeral
    Frombase {
        #[arg(allow_hyphen_values = true)]
        numeral: String,
        /// Require every digit to fit the alphabet of this base
        #[arg(long, value_name = "B")]
        strict: Option<BigInt>,
    },
    /// Compare polynomials or step through the order
    Order {
        #[command(subcommand)]
        op: OrderOp,
    },
    /// Add, subtract or multiply
    Arith {
        op: ArithOp,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Work digit by digit on base-x numerals
        #[arg(long)]
        digital: bool,
    },
    /// Quotient and remainder by a monic divisor, with 0 <= r < g
    Divmod {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        digital: bool,
    },
    /// Polynomial representative of an integer in another base
    Convert(ConvertArgs),
    /// Factor a polynomial from two of its values
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, requires = "b2")]
        b1: Option<BigInt>,
        #[arg(long, requires = "b1")]
        b2: Option<BigInt>,
        #[arg(long)]
        json: bool,
    },
    /// Decide irreducibility
    Irreducible {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Only run the generalized Cohn test at this base
        #[arg(long, value_name = "B", conflicts_with = "search_limit")]
        gcic_base: Option<BigInt>,
        /// Number of bases scanned for a prime value before factoring
        #[arg(long, value_name = "N", env = "BASEX_SEARCH_LIMIT", default_value_t = 100)]
        search_limit: u64,
        #[arg(long)]
        json: bool,
    },
    /// The family of irreducible polynomials attached to a prime
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
}

#[derive(Subcommand, Debug)]
enum OrderOp {
    /// Print <, = or >
    Cmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Succ {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Pred {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["value", "poly"]))]
struct ConvertArgs {
    #[arg(long, value_name = "C")]
    value: Option<BigInt>,
    #[arg(long, value_name = "F", allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long, value_name = "B1")]
    from: Option<BigInt>,
    #[arg(long, value_name = "B2")]
    to: BigInt,
    /// Largest value written in unary
    #[arg(long, default_value_t = DEFAULT_UNARY_CAP)]
    unary_cap: u64,
}

#[derive(Subcommand, Debug)]
enum FamilyOp {
    /// Representatives and coefficient replacements up to the given caps
    List {
        #[arg(short)]
        p: BigInt,
        #[arg(long)]
        max_base: u64,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Membership test
    Check {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(short)]
        p: BigInt,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses and runs one command line. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Tobase { poly } => {
            let f = parse_poly(&poly)?;
            writeln!(out, "{}", format_signed(&f))?;
        }
        Command::Frombase { numeral, strict } => {
            let f = match strict {
                Some(b) => parse_strict(&numeral, &b)?.to_polynomial(),
                None => parse_signed(&numeral)?,
            };
            writeln!(out, "{f}")?;
        }
        Command::Order { op } => order(op, out)?,
        Command::Arith { op, a, b, digital } => arith(op, &a, &b, digital, out)?,
        Command::Divmod { a, g, digital } => divmod(&a, &g, digital, out)?,
        Command::Convert(args) => convert(args, out)?,
        Command::Factor { poly, b1, b2, json } => factor(&poly, b1.zip(b2), json, out)?,
        Command::Irreducible {
            poly,
            gcic_base,
            search_limit,
            json,
        } => irreducible(&poly, gcic_base, search_limit, json, out)?,
        Command::Family { op } => family(op, out)?,
    }
    Ok(())
}

fn parse_poly(s: &str) -> Result<Polynomial, Failure> {
    Ok(s.parse::<Polynomial>()?)
}

fn is_numeral_text(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with('[') || t.starts_with("-[")
}

/// Numeral text (`[...]_x`, optionally signed) or polynomial text.
fn parse_operand(s: &str) -> Result<Polynomial, Failure> {
    if is_numeral_text(s) {
        Ok(parse_signed(s)?)
    } else {
        parse_poly(s)
    }
}

/// Results are written as numerals when any operand was given as one.
fn show(f: &Polynomial, as_numeral: bool) -> String {
    if as_numeral {
        format_signed(f)
    } else {
        f.to_string()
    }
}

fn order(op: OrderOp, out: &mut dyn Write) -> Outcome {
    match op {
        OrderOp::Cmp { a, b } => {
            let sign = match compare(&parse_operand(&a)?, &parse_operand(&b)?) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            writeln!(out, "{sign}")?;
        }
        OrderOp::Succ { a } => writeln!(out, "{}", show(&successor(&parse_operand(&a)?), is_numeral_text(&a)))?,
        OrderOp::Pred { a } => writeln!(out, "{}", show(&predecessor(&parse_operand(&a)?), is_numeral_text(&a)))?,
    }
    Ok(())
}

/// Numeral for a non-negative polynomial; digital operations work on these only.
fn digital_operand(s: &str) -> Result<BaseXNumeral, Failure> {
    let f = parse_operand(s)?;
    if f.is_zero() {
        return Ok(BaseXNumeral::zero());
    }
    Ok(to_base_x(&f)?)
}

fn arith(op: ArithOp, a: &str, b: &str, digital: bool, out: &mut dyn Write) -> Outcome {
    let as_numeral = digital || is_numeral_text(a) || is_numeral_text(b);
    let result = if digital {
        let (x, y) = (digital_operand(a)?, digital_operand(b)?);
        match op {
            ArithOp::Add => digital_add(&x, &y),
            ArithOp::Sub => digital_sub(&x, &y)?,
            ArithOp::Mul => digital_mul(&x, &y),
        }
        .to_polynomial()
    } else {
        let (x, y) = (parse_operand(a)?, parse_operand(b)?);
        match op {
            ArithOp::Add => &x + &y,
            ArithOp::Sub => &x - &y,
            ArithOp::Mul => &x * &y,
        }
    };
    writeln!(out, "{}", show(&result, as_numeral))?;
    Ok(())
}

fn divmod(a: &str, g: &str, digital: bool, out: &mut dyn Write) -> Outcome {
    let as_numeral = digital || is_numeral_text(a) || is_numeral_text(g);
    let (q, r) = if digital {
        let (q, r) = digital_divmod(&digital_operand(a)?, &digital_operand(g)?)?;
        (q.to_polynomial(), r.to_polynomial())
    } else {
        monic_divmod(&parse_operand(a)?, &parse_operand(g)?)?
    };
    writeln!(out, "{}", show(&q, as_numeral))?;
    writeln!(out, "{}", show(&r, as_numeral))?;
    Ok(())
}

fn write_poly_streamed(f: &Polynomial, out: &mut dyn Write) -> io::Result<()> {
    // unary representatives can run to a million terms
    let mut w = io::BufWriter::new(out);
    write!(w, "{f}")?;
    writeln!(w)?;
    w.flush()
}

fn convert(args: ConvertArgs, out: &mut dyn Write) -> Outcome {
    let opts = ConvertOptions {
        unary_cap: args.unary_cap,
    };
    let to = args.to;
    let result = match (args.value, args.poly) {
        (Some(c), _) => {
            if let Some(from) = &args.from {
                if !from.is_positive() {
                    return Err(Failure::Domain("base must be at least 1".into()));
                }
            }
            representative_with(&c, &to, opts)?
        }
        (None, Some(text)) => {
            let f = parse_poly(&text)?;
            let from = args.from.ok_or_else(|| Failure::Usage("--poly requires --from".into()))?;
            match to.cmp(&from) {
                Ordering::Less => basex_core::baseconv::descent_with(&f, &from, &(&from - &to), opts)?,
                _ => ascent(&f, &from, &(&to - &from))?,
            }
        }
        (None, None) => return Err(Failure::Usage("one of --value or --poly is required".into())),
    };
    write_poly_streamed(&result, out)?;
    Ok(())
}

fn prime_power_text(primes: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < primes.len() {
        let run = primes[i..].iter().take_while(|q| **q == primes[i]).count();
        parts.push(if run == 1 { primes[i].to_string() } else { format!("{}^{run}", primes[i]) });
        i += run;
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

/// `-6(x)(x+1)^2`, with the content omitted when it is 1 and factors exist.
fn factorization_text(sign: i32, r: &FactorizationResult) -> String {
    let mut s = String::new();
    if sign < 0 {
        s.push('-');
    }
    if !r.content.is_one() || r.factors.is_empty() {
        s.push_str(&r.content.to_string());
    }
    for f in &r.factors {
        s.push_str(&format!("({})", f.poly));
        if f.mult > 1 {
            s.push_str(&format!("^{}", f.mult));
        }
    }
    s
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn factorization_json(sign: i32, input: &Polynomial, r: &FactorizationResult) -> Value {
    json!({
        "poly": input.to_string(),
        "sign": sign,
        "content": r.content.to_string(),
        "factors": r.factors.iter().map(|f| json!({"poly": f.poly.to_string(), "mult": f.mult})).collect::<Vec<_>>(),
        "certificate": r.certificate.iter().map(|c| json!({
            "poly": c.poly.to_string(),
            "bound": c.bound.to_string(),
            "b1": c.b1.to_string(),
            "b2": c.b2.to_string(),
            "v1": c.v1.to_string(),
            "v2": c.v2.to_string(),
            "primes1": strings(&c.primes1),
            "primes2": strings(&c.primes2),
            "pattern": c.pattern.as_ref().map(|p| p.to_string()),
        })).collect::<Vec<_>>(),
    })
}

fn write_json(value: &Value, out: &mut dyn Write) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Domain(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn factor(text: &str, bases: Option<(BigInt, BigInt)>, json: bool, out: &mut dyn Write) -> Outcome {
    let input = parse_poly(text)?;
    if input.is_zero() {
        return Err(Failure::Domain(Error::ZeroPolynomial("factorization").to_string()));
    }
    let (sign, f) = if input.is_negative() { (-1, -&input) } else { (1, input.clone()) };
    let r = match bases {
        Some(b) => factorize_with(&f, Some(b))?,
        None => factorize(&f)?,
    };
    if json {
        return write_json(&factorization_json(sign, &input, &r), out);
    }
    writeln!(out, "{}", factorization_text(sign, &r))?;
    for (i, c) in r.certificate.iter().enumerate() {
        writeln!(out, "level {}: {} bound={} b1={} b2={}", i + 1, c.poly, c.bound, c.b1, c.b2)?;
        writeln!(out, "  f({}) = {} = {}", c.b1, c.v1, prime_power_text(&c.primes1))?;
        writeln!(out, "  f({}) = {} = {}", c.b2, c.v2, prime_power_text(&c.primes2))?;
        match &c.pattern {
            Some(p) => writeln!(out, "  divisor {} = {}", p, p.to_polynomial())?,
            None => writeln!(out, "  no divisor pattern: irreducible")?,
        }
    }
    Ok(())
}

fn irreducible(text: &str, gcic_base: Option<BigInt>, limit: u64, json: bool, out: &mut dyn Write) -> Outcome {
    let f = parse_poly(text)?;
    if !f.is_positive() {
        return Err(Error::NotPositive.into());
    }
    if f.is_constant() {
        return Err(Failure::Domain("polynomial must be non-constant".into()));
    }
    let report = if let Some(b) = gcic_base {
        match gcic_test(&f, &b)? {
            Some(v) => json!({"verdict": "irreducible", "method": "gcic", "base": b.to_string(), "value": v.to_string()}),
            None => json!({"verdict": "inconclusive", "method": "gcic", "base": b.to_string(), "value": f.evaluate(&b).to_string()}),
        }
    } else if let Some(w) = cohn_general_test(&f, limit)? {
        json!({"verdict": "irreducible", "method": "cohn", "base": w.base.to_string(), "value": w.value.to_string()})
    } else {
        let r = factorize(&f)?;
        let verdict = if r.is_irreducible() { "irreducible" } else { "reducible" };
        json!({"verdict": verdict, "method": "factorization", "factors": factorization_text(1, &r)})
    };
    let mut report = report;
    report["poly"] = json!(f.to_string());
    if json {
        return write_json(&report, out);
    }
    let verdict = report["verdict"].as_str().unwrap_or_default();
    match report["method"].as_str() {
        Some("factorization") => writeln!(out, "{verdict}: {}", report["factors"].as_str().unwrap_or_default())?,
        Some(method) => {
            let (base, value) = (report["base"].as_str().unwrap_or_default(), report["value"].as_str().unwrap_or_default());
            let prime = if verdict == "irreducible" { "prime" } else { "not prime" };
            writeln!(out, "{verdict}: {method} f({base}) = {value} is {prime}")?;
        }
        None => unreachable!("every report names its method"),
    }
    Ok(())
}

fn derivation_json(d: &Derivation) -> Value {
    match d {
        Derivation::Constant => json!({"kind": "constant"}),
        Derivation::Seed => json!({"kind": "seed"}),
        Derivation::Representative { base } => json!({"kind": "representative", "base": base.to_string()}),
        Derivation::Replaced {
            base,
            indices,
            extension,
        } => json!({"kind": "replaced", "base": base.to_string(), "indices": indices, "extension": extension}),
    }
}

fn member_json(m: &FamilyMember) -> Value {
    json!({
        "poly": m.poly.to_string(),
        "witness_base": m.witness_base.as_ref().map(BigInt::to_string),
        "derivation": derivation_json(&m.derivation),
    })
}

fn derivation_text(d: &Derivation) -> String {
    match d {
        Derivation::Constant => "constant".into(),
        Derivation::Seed => "seed".into(),
        Derivation::Representative { base } => format!("representative b={base}"),
        Derivation::Replaced {
            base,
            indices,
            extension,
        } => {
            let idx: Vec<String> = indices.iter().map(usize::to_string).collect();
            format!("replaced b={base} I={{{}}} extension={extension}", idx.join(","))
        }
    }
}

fn family(op: FamilyOp, out: &mut dyn Write) -> Outcome {
    match op {
        FamilyOp::List {
            p,
            max_base,
            max_degree,
            json,
        } => {
            if max_base < 1 {
                return Err(Failure::Domain("max-base must be at least 1".into()));
            }
            let mut members = representatives(&p, &BigInt::from(max_base))?;
            let mut rejected = Vec::new();
            let mut skipped = Vec::new();
            for b in 1..=max_base {
                let b = BigInt::from(b);
                if representative(&p, &b)?.degree().is_some_and(|d| d > max_degree) {
                    skipped.push(b);
                    continue;
                }
                let scan = variants(&p, &b, max_degree)?;
                members.extend(scan.accepted);
                rejected.extend(scan.rejected);
            }
            if json {
                let value = json!({
                    "prime": p.to_string(),
                    "max_base": max_base,
                    "max_degree": max_degree,
                    "complete": false,
                    "members": members.iter().map(member_json).collect::<Vec<_>>(),
                    "rejected": rejected.iter().map(Polynomial::to_string).collect::<Vec<_>>(),
                    "skipped_bases": strings(&skipped),
                });
                return write_json(&value, out);
            }
            for m in &members {
                writeln!(out, "{}\t{}", m.poly, derivation_text(&m.derivation))?;
            }
            writeln!(
                out,
                "# {} members, {} rejected replacements; the family is infinite and this list is capped",
                members.len(),
                rejected.len()
            )?;
        }
        FamilyOp::Check { poly, p, json } => {
            let g = parse_poly(&poly)?;
            if !is_prime(&p) {
                return Err(Error::NotPrime(p).into());
            }
            let m = is_member(&g, &p)?;
            if json {
                let value = json!({
                    "poly": g.to_string(),
                    "prime": p.to_string(),
                    "member": m.is_some(),
                    "witness_base": m.as_ref().and_then(|m| m.witness_base.as_ref().map(BigInt::to_string)),
                    "derivation": m.as_ref().map(|m| derivation_json(&m.derivation)),
                });
                return write_json(&value, out);
            }
            match m {
                Some(m) => match &m.witness_base {
                    Some(b) => writeln!(out, "member: f({b}) = {p}, {}", derivation_text(&m.derivation))?,
                    None => writeln!(out, "member: {}", derivation_text(&m.derivation))?,
                },
                None => writeln!(out, "not a member")?,
            }
        }
    }
    Ok(())
}
