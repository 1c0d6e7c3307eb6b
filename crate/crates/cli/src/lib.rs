//! The `heisdouble` command line. Every subcommand prints one JSON document
//! on standard output.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use heisdouble::element::{pair, skew_action, Basis, DynHeisenberg, GradedElement};
use heisdouble::error::{Error, Result};
use heisdouble::expr::{evaluate, Context, Val};
use heisdouble::freeness::freeness_report;
use heisdouble::hecke::{
    coset_parameters, double_cosets, hecke_suite, verify_double_cosets, verify_twr_commutation, HeckeParams,
};
use heisdouble::heisenberg::{
    faithfulness_witnesses, highest_weight_selftest, lowest_weight_selftest, nonfaithfulness_witness,
    stone_von_neumann, verify_relations, Suite,
};
use heisdouble::hopf::{antipode_involution_check, axiom_check, pairing_check};
use heisdouble::instances::{
    DividedPowers, NSym, NilcoxeterPair, Polynomial, PowerSumPair, QSym, QuasiPair, Sym, SymPair,
};
use heisdouble::report::Report;
use heisdouble::rootofunity::{glaisher_check, rootofunity_suite, split_check};
use heisdouble::scalar::{parse_rational, Scalar};

#[derive(Parser, Debug)]
#[command(name = "heisdouble", version, about = "Exact computations in Heisenberg doubles")]
struct Cli {
    /// Also print a rendering on standard error; its format is not stable.
    #[arg(long, global = true)]
    human: bool,
    /// Compute over ℚ instead of ℤ (needed for the power-sum basis).
    #[arg(long, global = true)]
    rational: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ExprArgs {
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
    /// Express the result in this basis.
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Args, Debug)]
struct BinaryArgs {
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
    /// Second operand.
    #[arg(long, allow_hyphen_values = true)]
    on: String,
}

#[derive(Args, Debug)]
struct HeckeArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    d: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression (sums, products, scalars).
    Mul(ExprArgs),
    /// Coproduct of an element, in its own basis.
    Coproduct(ExprArgs),
    /// Hopf pairing of two elements.
    Pair(BinaryArgs),
    /// Change of basis.
    Convert(ExprArgs),
    /// Skew action `x*(a)` of `--expr x` on `--on a`.
    Skew(BinaryArgs),
    /// Product in a Heisenberg double.
    HeisMul(ExprArgs),
    /// Action of a Heisenberg double element on a Fock space vector.
    Fock {
        #[command(flatten)]
        args: BinaryArgs,
        /// Act on the highest-weight Fock space (the minus side).
        #[arg(long)]
        highest: bool,
    },
    /// Arithmetic in the Hecke-like algebra `T_i² = c T_i + d`.
    Hecke {
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        params: HeckeArgs,
        /// Smallest rank for the atoms of the expression.
        #[arg(long, default_value_t = 0)]
        rank: usize,
    },
    /// Double cosets `(S_k × S_ℓ) \ S_N / (S_n × S_m)`.
    Cosets {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        #[command(flatten)]
        params: HeckeArgs,
    },
    /// The quotient Heisenberg double at an ℓ-th root of unity.
    Rootofunity {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Certify that QSym is free over Sym up to a degree.
    Freeness {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Write the full certificate (generators included) to this file.
        #[arg(long)]
        emit_certificate: Option<std::path::PathBuf>,
    },
}

/// Suites served by `verify`, besides the Heisenberg relation suites.
const EXTRA_SUITES: [&str; 12] = [
    "hopf",
    "pairing",
    "hecke",
    "cosets",
    "twr",
    "stone_von_neumann",
    "faithfulness",
    "nonfaithfulness",
    "fock",
    "rootofunity",
    "glaisher",
    "freeness",
];

enum Outcome {
    Value(Value),
    Report(Value, bool),
}

/// Runs one invocation. Returns the exit code: 0 on success, 1 when a
/// suite reports failures, 2 on usage, parse or domain errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let res = if cli.rational {
        dispatch::<BigRational>(&cli.command)
    } else {
        dispatch::<BigInt>(&cli.command)
    };
    match res {
        Ok(outcome) => {
            let (v, code) = match outcome {
                Outcome::Value(v) => (v, 0),
                Outcome::Report(v, ok) => (v, if ok { 0 } else { 1 }),
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&v).expect("JSON serializes"));
            if cli.human {
                let _ = writeln!(err, "{}", render(&v));
            }
            code
        }
        Err(e @ (Error::Torsion { .. } | Error::NotUnimodular { .. })) => {
            let mut rep = Report::new("freeness", 0);
            rep.check(false, || e.to_string(), || json!(null));
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string(&rep.to_json()).expect("JSON serializes")
            );
            let _ = writeln!(err, "heisdouble: {e}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "heisdouble: {e}");
            2
        }
    }
}

fn context(params: &HeckeArgs, rank: usize) -> Result<Context> {
    Ok(Context {
        hecke: hecke_params(params)?,
        min_rank: rank,
    })
}

fn hecke_params(p: &HeckeArgs) -> Result<HeckeParams> {
    Ok(HeckeParams::new(parse_rational(&p.c)?, parse_rational(&p.d)?))
}

fn element<R: Scalar>(src: &str) -> Result<GradedElement<R>> {
    match evaluate::<R>(src, &Context::default())? {
        Val::Element(e) => Ok(e),
        Val::Scalar(_) => Err(Error::Usage(format!(
            "{src:?} is a bare scalar; name a basis, e.g. 3*M[]"
        ))),
        _ => Err(Error::Usage(format!("{src:?} is not an element of a Hopf algebra"))),
    }
}

fn heisenberg<R: Scalar>(src: &str) -> Result<DynHeisenberg<R>> {
    match evaluate::<R>(src, &Context::default())? {
        Val::Heisenberg(h) => Ok(h),
        Val::Element(e) => Ok(DynHeisenberg::embed(&e)),
        _ => Err(Error::Usage(format!(
            "{src:?} is not an element of a Heisenberg double"
        ))),
    }
}

fn in_basis<R: Scalar>(e: GradedElement<R>, basis: &Option<String>) -> Result<GradedElement<R>> {
    match basis {
        Some(b) => e.convert(b.parse::<Basis>()?),
        None => Ok(e),
    }
}

fn report(r: Report) -> Outcome {
    let ok = r.passed();
    Outcome::Report(r.to_json(), ok)
}

fn dispatch<R: Scalar>(cmd: &Command) -> Result<Outcome> {
    Ok(match cmd {
        Command::Mul(a) => match evaluate::<R>(&a.expr, &Context::default())? {
            Val::Element(e) => Outcome::Value(in_basis(e, &a.basis)?.to_json()),
            other => Outcome::Value(other.to_json()),
        },
        Command::Coproduct(a) => Outcome::Value(in_basis(element::<R>(&a.expr)?, &a.basis)?.coproduct()?.to_json()),
        Command::Convert(a) => {
            let target = a
                .basis
                .as_ref()
                .ok_or_else(|| Error::Usage("convert needs --basis".into()))?;
            Outcome::Value(element::<R>(&a.expr)?.convert(target.parse()?)?.to_json())
        }
        Command::Pair(b) => {
            let v = pair(&element::<R>(&b.expr)?, &element::<R>(&b.on)?)?;
            Outcome::Value(json!({"pairing": heisdouble::scalar::encode_rational(&v.to_rational())}))
        }
        Command::Skew(b) => Outcome::Value(skew_action(&element::<R>(&b.expr)?, &element::<R>(&b.on)?)?.to_json()),
        Command::HeisMul(a) => Outcome::Value(heisenberg::<R>(&a.expr)?.to_json()),
        Command::Fock { args, highest } => {
            let h = heisenberg::<R>(&args.expr)?;
            let v = element::<R>(&args.on)?;
            let w = if *highest {
                h.hw_fock_apply(&v)?
            } else {
                h.fock_apply(&v)?
            };
            Outcome::Value(w.to_json())
        }
        Command::Hecke { expr, params, rank } => match evaluate::<BigRational>(expr, &context(params, *rank)?)? {
            v @ Val::Hecke(_) => Outcome::Value(v.to_json()),
            _ => return Err(Error::Usage(format!("{expr:?} is not a Hecke-like algebra element"))),
        },
        Command::Cosets { k, l, n, m } => {
            let cs = double_cosets(*k, *l, *n, *m)?;
            Outcome::Value(json!({
                "k": k, "l": l, "n": n, "m": m,
                "cosets": cs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            }))
        }
        Command::Verify {
            suite,
            max_degree,
            ell,
            params,
        } => report(verify(suite, *max_degree, *ell, params)?),
        Command::Rootofunity { ell, max_degree } => report(rootofunity_suite(*ell, *max_degree)?),
        Command::Freeness {
            max_degree,
            emit_certificate,
        } => {
            let (rep, cert) = freeness_report(*max_degree)?;
            if let Some(path) = emit_certificate {
                let text = serde_json::to_string(&cert.to_json()).expect("JSON serializes");
                std::fs::write(path, text + "\n")
                    .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let ok = rep.passed();
            let mut v = rep.to_json();
            let c = cert.to_json();
            v["counts"] = c["counts"].clone();
            v["determinants"] = c["determinants"].clone();
            Outcome::Report(v, ok)
        }
    })
}

fn verify(suite: &str, max_degree: usize, ell: usize, params: &HeckeArgs) -> Result<Report> {
    if let Ok(s) = suite.parse::<Suite>() {
        return Ok(verify_relations(s, max_degree));
    }
    let mut rep = Report::new(suite, max_degree);
    match suite {
        "hopf" => {
            rep.absorb(axiom_check(Sym::shared(), max_degree));
            rep.absorb(axiom_check(QSym::shared(), max_degree));
            rep.absorb(axiom_check(NSym::shared(), max_degree));
            rep.absorb(axiom_check(&DividedPowers, max_degree));
            rep.absorb(axiom_check(&Polynomial, max_degree));
            rep.absorb(antipode_involution_check(QSym::shared(), max_degree));
            rep.absorb(antipode_involution_check(NSym::shared(), max_degree));
        }
        "pairing" => {
            rep.absorb(pairing_check(SymPair::shared(), max_degree));
            rep.absorb(pairing_check(QuasiPair::shared(), max_degree));
            rep.absorb(pairing_check(NilcoxeterPair::shared(), max_degree));
            for l in [2, 3] {
                rep.absorb(pairing_check(&PowerSumPair::quotient(l), max_degree));
            }
        }
        "hecke" => rep.absorb(hecke_suite(max_degree.min(5), 0)?),
        "cosets" => {
            for total in 0..=max_degree {
                for (k, l, n, m) in coset_parameters(total) {
                    rep.absorb(verify_double_cosets(k, l, n, m)?);
                }
            }
        }
        "twr" => {
            let p = hecke_params(params)?;
            for total in 0..=max_degree {
                for (k, l, n, m) in coset_parameters(total) {
                    rep.absorb(verify_twr_commutation(k, l, n, m, &p)?);
                }
            }
        }
        "stone_von_neumann" => {
            for l in 1..=max_degree {
                rep.absorb(stone_von_neumann(QuasiPair::shared(), l, max_degree)?);
                rep.absorb(stone_von_neumann(SymPair::shared(), l, max_degree)?);
                rep.absorb(stone_von_neumann(NilcoxeterPair::shared(), l, max_degree)?);
            }
        }
        "faithfulness" => {
            rep.absorb(faithfulness_witnesses(QuasiPair::shared(), 100, max_degree, 1));
            rep.absorb(faithfulness_witnesses(SymPair::shared(), 100, max_degree, 2));
            rep.absorb(faithfulness_witnesses(NilcoxeterPair::shared(), 100, max_degree, 3));
        }
        "nonfaithfulness" => rep.absorb(nonfaithfulness_witness(max_degree)),
        "fock" => {
            rep.absorb(lowest_weight_selftest(QuasiPair::shared(), max_degree));
            rep.absorb(lowest_weight_selftest(SymPair::shared(), max_degree));
            rep.absorb(lowest_weight_selftest(NilcoxeterPair::shared(), max_degree));
            rep.absorb(highest_weight_selftest(QuasiPair::shared(), max_degree));
            rep.absorb(highest_weight_selftest(SymPair::shared(), max_degree));
            rep.absorb(highest_weight_selftest(NilcoxeterPair::shared(), max_degree));
        }
        "rootofunity" => {
            rep.absorb(rootofunity_suite(ell, max_degree)?);
            rep.absorb(split_check(ell, max_degree)?);
        }
        "glaisher" => rep.absorb(glaisher_check(max_degree, ell.max(2))),
        "freeness" => rep.absorb(freeness_report(max_degree)?.0),
        _ => {
            let known: Vec<&str> = Suite::ALL.iter().map(|s| s.tag()).chain(EXTRA_SUITES).collect();
            return Err(Error::Usage(format!(
                "unknown suite {suite:?}; known: {}",
                known.join(", ")
            )));
        }
    }
    Ok(rep)
}

/// A readable rendering of an output document.
fn render(v: &Value) -> String {
    if let (Some(suite), Some(checks)) = (v["suite"].as_str(), v["checks"].as_u64()) {
        let fails = v["failures"].as_array().map_or(0, Vec::len);
        return format!("{suite}: {checks} checks, {fails} failures");
    }
    if let Some(p) = v["pairing"].as_str() {
        return p.to_string();
    }
    let Some(terms) = v["terms"].as_array() else {
        return v.to_string();
    };
    if terms.is_empty() {
        return "0".into();
    }
    let name = v["basis"].as_str().unwrap_or("T");
    let show = |x: &Value| {
        x.as_array()
            .map(|a| a.iter().map(Value::to_string).collect::<Vec<_>>().join(","))
            .unwrap_or_default()
    };
    let mut text = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = t["coeff"].as_str().unwrap_or("?");
        let key = if let Some(p) = t.get("plus") {
            format!("[{}]#[{}]", show(p), show(&t["minus"]))
        } else if let Some(w) = t.get("perm") {
            format!("T[{}]", show(w))
        } else {
            match t["index"].as_array() {
                Some(a) if a.first().is_some_and(Value::is_array) => {
                    format!("{name}[{}]⊗{name}[{}]", show(&a[0]), show(&a[1]))
                }
                _ => format!("{name}[{}]", show(&t["index"])),
            }
        };
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c),
        };
        text += match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        if mag != "1" {
            text += mag;
            text += "·";
        }
        text += &key;
    }
    text
}
