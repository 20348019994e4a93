//! Command-line surface over the qcyclo library. Every subcommand emits a
//! JSON envelope echoing the pair and the generator conventions so results
//! are reproducible across machines; `char-table` and `lfunction --format
//! csv` stream CSV instead. Exit codes: 0 success, 2 invalid usage or
//! parameters, 3 internal mathematical inconsistency (two computation routes
//! disagreeing -- never silently ignored).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcyclo_core::cyclotomic::{CycPoly, CycSum};
use qcyclo_core::error::Error;
use qcyclo_core::frobenius::{
    decomposition_at, frobenius_in_g, frobenius_lift, inertia_lift, is_ramified, FrobLift,
};
use qcyclo_core::group::{
    case_c_smith, displayed_n_orders, invariant_factors, subgroup_n, CaseTag, FieldParams,
    GroupElement,
};
use qcyclo_core::lfunc::{
    artin_product, corollary_report, euler_expand, euler_product_explicit, explicit_local_factor,
    generic_local_factor, two_dim_for_index,
};
use qcyclo_core::reps::{
    character, enumerate_one_dim, enumerate_two_dim, Irrep, OneDimRep, TwoDimRep,
};
use qcyclo_core::units::eval_unit;

#[derive(Parser)]
#[command(
    name = "qcyclo",
    version,
    about = "Galois groups, irreducible representations and Artin L-functions \
             of primary quasi-cyclotomic fields",
    long_about = "Exact computations for the pair (p, q): group presentation and case \
                  classification, the abelian index-2 subgroup and its invariant factors, \
                  all irreducible representations with explicit matrices, Frobenius and \
                  inertia data, local Euler factors (explicit and determinant routes), \
                  Dirichlet coefficients and the zeta-ratio factorisation.\n\n\
                  Roots of unity are encoded as {num, den} meaning exp(2*pi*i*num/den). \
                  The environment variable QCYCLO_THREADS caps internal parallelism."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct PairArgs {
    /// First element of the pair: -1 or a prime, with p < q.
    #[arg(short, long, allow_hyphen_values = true)]
    p: i64,
    /// Second element of the pair: a prime.
    #[arg(short, long, allow_hyphen_values = true)]
    q: i64,
    /// Print only the chosen primitive-root conventions and exit.
    #[arg(long)]
    seed_conventions: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Case tag, generator orders and doubling flags.
    Classify(PairArgs),
    /// Group size, the index-2 subgroup, invariant factors and (case C)
    /// the diagonalisation data.
    Group(PairArgs),
    /// Every irreducible representation with explicit matrices.
    Reps(PairArgs),
    /// CSV character table: rows are irreducibles, columns are conjugacy
    /// class representatives.
    CharTable(PairArgs),
    /// Decomposition type, Frobenius exponents, lift and inertia candidates
    /// at a prime (p = -1 family).
    Frobenius {
        #[command(flatten)]
        pair: PairArgs,
        /// The prime to inspect.
        #[arg(long)]
        ell: u64,
    },
    /// Explicit and determinant-route inverse local factors at a prime, with
    /// an equality flag (p = -1 family).
    Lfactor {
        #[command(flatten)]
        pair: PairArgs,
        /// Representation index (even below q-1 for q = 1 mod 4, odd for
        /// q = 3 mod 4, 0 for q = 2).
        #[arg(long)]
        j: u64,
        /// The prime to inspect.
        #[arg(long)]
        ell: u64,
    },
    /// Local factors up to a prime bound and Dirichlet coefficients of one
    /// representation's L-function (p = -1 family).
    Lfunction {
        #[command(flatten)]
        pair: PairArgs,
        /// Representation index.
        #[arg(long)]
        j: u64,
        /// Include local factors for all primes up to this bound.
        #[arg(long)]
        prime_bound: u64,
        /// Number of Dirichlet coefficients to expand.
        #[arg(long)]
        coeffs: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Per-prime factors of the zeta ratio, the printed closed-form
    /// comparison report, and the expanded coefficients (p = -1 family).
    ZetaRatio {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        prime_bound: u64,
        #[arg(long)]
        coeffs: usize,
    },
    /// Floating evaluation of the sine-product unit for the pair.
    UnitValue {
        #[command(flatten)]
        pair: PairArgs,
        /// Evaluate the ambiguous p = 2 product reading the stray index as
        /// 4j + 1.
        #[arg(long)]
        p2_interpretation: bool,
    },
}

fn conventions(params: &FieldParams) -> Value {
    json!({
        "primitive_root_p": params.root_p,
        "primitive_root_q": params.root_q,
        "root_of_unity_encoding": "{num, den} means exp(2*pi*i*num/den)",
        "canonical_square_root": "the smaller of the two roots modulo an odd prime",
        "element_notation": "generator exponents in listed order, then the sign bit e",
    })
}

fn envelope(command: &str, params: &FieldParams, payload: Value) -> Value {
    json!({
        "schema_version": "1.0",
        "command": command,
        "params_echo": {
            "p": params.p.value(),
            "q": params.q.value(),
            "conventions": conventions(params),
        },
        "payload": payload,
    })
}

fn print_envelope(command: &str, params: &FieldParams, payload: Value) {
    let out = envelope(command, params, payload);
    println!("{}", serde_json::to_string_pretty(&out).expect("serialise"));
}

fn cycsum_terms_json(c: &CycSum) -> Value {
    Value::Array(
        c.terms()
            .map(|(r, m)| {
                json!({
                    "mult": m as i64,
                    "num": r.num(),
                    "den": r.den(),
                })
            })
            .collect(),
    )
}

fn poly_json(p: &CycPoly) -> Value {
    let d = p.degree_exact();
    Value::Array(
        p.coeffs[..=d]
            .iter()
            .map(cycsum_terms_json)
            .collect(),
    )
}

fn poly_int_json(p: &CycPoly) -> Value {
    match p.to_int_coeffs() {
        Some(v) => json!(v.iter().map(|&c| c as i64).collect::<Vec<_>>()),
        None => Value::Null,
    }
}

fn fmt_cycsum(c: &CycSum) -> String {
    if c.num_terms() == 0 {
        return "0".to_string();
    }
    c.terms()
        .map(|(r, m)| format!("{}*e({}/{})", m, r.num(), r.den()))
        .collect::<Vec<_>>()
        .join("+")
}

fn generator_names(params: &FieldParams) -> Vec<String> {
    params
        .generators
        .iter()
        .map(|g| g.name.to_string())
        .collect()
}

fn one_dim_json(params: &FieldParams, rep: &OneDimRep) -> Value {
    let names = generator_names(params);
    let mut values = serde_json::Map::new();
    for (k, name) in names.iter().enumerate() {
        values.insert(
            name.clone(),
            serde_json::to_value(rep.values[k]).expect("root"),
        );
    }
    json!({
        "label": one_dim_label(params, rep),
        "values": Value::Object(values),
        "eps": {"num": 0, "den": 1},
    })
}

fn one_dim_label(params: &FieldParams, rep: &OneDimRep) -> String {
    let exps: Vec<String> = rep
        .values
        .iter()
        .zip(&params.generators)
        .map(|(v, g)| {
            let n = g.base_order as u64;
            (v.num() * (n / v.den())).to_string()
        })
        .collect();
    format!("chi[{}]", exps.join(";"))
}

fn two_dim_label(rep: &TwoDimRep) -> String {
    format!("{}[i={};j={}]", rep.family, rep.i, rep.j)
}

fn two_dim_json(params: &FieldParams, rep: &TwoDimRep) -> Value {
    let names = generator_names(params);
    let mut images = serde_json::Map::new();
    for (k, name) in names.iter().enumerate() {
        images.insert(
            name.clone(),
            serde_json::to_value(rep.images[k]).expect("matrix"),
        );
    }
    json!({
        "family": rep.family.as_str(),
        "i": rep.i,
        "j": rep.j,
        "images": Value::Object(images),
        "eps_image": serde_json::to_value(rep.eps_image).expect("matrix"),
    })
}

fn element_json(params: &FieldParams, x: GroupElement) -> Value {
    json!({
        "exps": x.exps[..params.generators.len()].to_vec(),
        "eps": x.eps,
        "notation": params.notation(x),
    })
}

fn cmd_classify(params: &FieldParams) -> Result<(), Error> {
    let gens: Vec<Value> = params
        .generators
        .iter()
        .map(|g| {
            json!({
                "name": g.name.to_string(),
                "base_order": g.base_order,
                "delta": g.delta,
                "lifted_order": g.lifted_order(),
            })
        })
        .collect();
    let payload = json!({
        "case": params.case.letter().to_string(),
        "case_tag": params.case.to_string(),
        "conductor": params.conductor,
        "group_order": params.group_order(),
        "lifted_group_order": params.lifted_order(),
        "generators": gens,
        "twist_pair": [
            params.generators[params.twist.0].name.to_string(),
            params.generators[params.twist.1].name.to_string(),
        ],
    });
    print_envelope("classify", params, payload);
    Ok(())
}

fn cmd_group(params: &FieldParams) -> Result<(), Error> {
    let n = subgroup_n(params);
    let factors = invariant_factors(params, &n.elements)?;
    let smith = match params.case {
        CaseTag::CFirst | CaseTag::CSecond => {
            let s = case_c_smith(params)?;
            json!({
                "d": s.d, "s": s.s, "t": s.t, "u": s.u, "v": s.v,
                "a": s.a_mat, "p": s.p_mat, "q": s.q_mat, "b": s.b_mat,
                "tau": element_json(params, s.tau),
                "mu": element_json(params, s.mu),
                "second_subcase": s.second_subcase,
            })
        }
        _ => Value::Null,
    };
    let payload = json!({
        "element_count": params.lifted_order(),
        "n_subgroup": {
            "generators": n.gens.iter().map(|&g| params.notation(g)).collect::<Vec<_>>(),
            "size": n.len(),
            "invariant_factors": factors,
            "displayed_orders": displayed_n_orders(params),
        },
        "smith": smith,
    });
    print_envelope("group", params, payload);
    Ok(())
}

fn cmd_reps(params: &FieldParams) -> Result<(), Error> {
    let one: Vec<Value> = enumerate_one_dim(params)
        .iter()
        .map(|r| one_dim_json(params, r))
        .collect();
    let two: Vec<Value> = enumerate_two_dim(params)?
        .iter()
        .map(|r| two_dim_json(params, r))
        .collect();
    let payload = json!({
        "one_dim": one,
        "two_dim": two,
    });
    print_envelope("reps", params, payload);
    Ok(())
}

fn cmd_char_table(params: &FieldParams) -> Result<(), Error> {
    let classes = params.conjugacy_classes();
    let reps: Vec<GroupElement> = classes.iter().map(|c| c[0]).collect();
    let mut irreps: Vec<(String, Irrep)> = enumerate_one_dim(params)
        .into_iter()
        .map(|r| (one_dim_label(params, &r), Irrep::OneDim(r)))
        .collect();
    irreps.extend(
        enumerate_two_dim(params)?
            .into_iter()
            .map(|r| (two_dim_label(&r), Irrep::TwoDim(r))),
    );
    let header: Vec<String> = std::iter::once("irrep".to_string())
        .chain(reps.iter().map(|&x| params.notation(x)))
        .collect();
    println!("{}", header.join(","));
    for (label, irrep) in &irreps {
        let mut row = vec![label.clone()];
        for &x in &reps {
            let value = character(irrep, x);
            let c = value.eval();
            row.push(format!("{} ~ {:.6}{:+.6}i", fmt_cycsum(&value), c.re, c.im));
        }
        println!("{}", row.join(","));
    }
    Ok(())
}

fn cmd_frobenius(params: &FieldParams, ell: u64) -> Result<(), Error> {
    if !qcyclo_core::arith::is_prime(ell) {
        return Err(Error::InvalidParams(format!("{ell} is not prime")));
    }
    let decomposition = decomposition_at(params, ell)?;
    let (a, b) = match frobenius_in_g(params, ell) {
        Ok((a, b)) => (json!(a), json!(b)),
        Err(_) => (Value::Null, Value::Null),
    };
    let (lift, u_ell, u_q) = if is_ramified(params, ell)? {
        (json!({"kind": "none_ramified"}), Value::Null, Value::Null)
    } else {
        let data = frobenius_lift(params, ell)?;
        let lift = match data.lift {
            FrobLift::Exact(x) => json!({
                "kind": "exact",
                "element": element_json(params, x),
            }),
            FrobLift::Ambiguous(x) => json!({
                "kind": "ambiguous_irrelevant",
                "element": element_json(params, x),
                "alternative": element_json(params, params.multiply(x, GroupElement::EPSILON)),
            }),
        };
        (lift, json!(data.u_ell), json!(data.u_q))
    };
    let inertia: Vec<Value> = inertia_lift(params, ell)?
        .iter()
        .map(|c| {
            json!({
                "generators": c.gens.iter().map(|&g| params.notation(g)).collect::<Vec<_>>(),
                "size": c.elements.len(),
                "contains_sign_element": c.elements.contains(&GroupElement::EPSILON),
            })
        })
        .collect();
    let payload = json!({
        "ell": ell,
        "decomposition": decomposition.to_string(),
        "a": a,
        "b": b,
        "u_ell": u_ell,
        "u_q": u_q,
        "lift": lift,
        "inertia_candidates": inertia,
    });
    print_envelope("frobenius", params, payload);
    Ok(())
}

fn cmd_lfactor(params: &FieldParams, j: u64, ell: u64) -> Result<(), Error> {
    if !qcyclo_core::arith::is_prime(ell) {
        return Err(Error::InvalidParams(format!("{ell} is not prime")));
    }
    let rep = two_dim_for_index(params, j)?;
    let explicit = explicit_local_factor(params, j, ell)?;
    let generic = generic_local_factor(params, &rep, ell)?;
    let equal = explicit.inverse.eq_exact(&generic.inverse);
    let payload = json!({
        "j": j,
        "ell": ell,
        "explicit": poly_json(&explicit.inverse),
        "explicit_integer": poly_int_json(&explicit.inverse),
        "generic": poly_json(&generic.inverse),
        "generic_integer": poly_int_json(&generic.inverse),
        "equal": equal,
    });
    print_envelope("lfactor", params, payload);
    if !equal {
        return Err(Error::Inconsistency(format!(
            "explicit and determinant local factors disagree at l = {ell}, j = {j}"
        )));
    }
    Ok(())
}

fn cmd_lfunction(
    params: &FieldParams,
    j: u64,
    prime_bound: u64,
    coeffs: usize,
    format: OutputFormat,
) -> Result<(), Error> {
    if (prime_bound as usize) < coeffs {
        return Err(Error::InvalidParams(format!(
            "prime bound {prime_bound} does not cover coefficients up to {coeffs}"
        )));
    }
    let product = euler_product_explicit(params, j, prime_bound)?;
    let series = euler_expand(&product, coeffs)?;
    match format {
        OutputFormat::Csv => {
            println!("n,re,im");
            for n in 1..=coeffs {
                println!("{},{:.15e},{:.15e}", n, series.a[n].re, series.a[n].im);
            }
        }
        OutputFormat::Json => {
            let factors: Vec<Value> = product
                .factors
                .values()
                .map(|f| {
                    json!({
                        "prime": f.prime,
                        "inverse": poly_json(&f.inverse),
                        "inverse_integer": poly_int_json(&f.inverse),
                    })
                })
                .collect();
            let coefficients: Vec<Value> = (1..=coeffs)
                .map(|n| json!({"n": n, "re": series.a[n].re, "im": series.a[n].im}))
                .collect();
            let payload = json!({
                "j": j,
                "prime_bound": prime_bound,
                "coefficient_bound": coeffs,
                "local_factors": factors,
                "coefficients": coefficients,
            });
            print_envelope("lfunction", params, payload);
        }
    }
    Ok(())
}

fn cmd_zeta_ratio(params: &FieldParams, prime_bound: u64, coeffs: usize) -> Result<(), Error> {
    let (factors, series) = artin_product(params, prime_bound, coeffs)?;
    let closed_form = if params.q.value() != 2 {
        Some(corollary_report(params, prime_bound)?)
    } else {
        None
    };
    let per_prime: Vec<Value> = factors
        .iter()
        .map(|f| {
            let row = closed_form
                .as_ref()
                .and_then(|rows| rows.iter().find(|c| c.prime == f.prime));
            json!({
                "prime": f.prime,
                "inverse_integer": f.inverse_int,
                "printed_closed_form": row.map(|c| json!(c.printed)).unwrap_or(Value::Null),
                "agree": row.map(|c| json!(c.agree)).unwrap_or(Value::Null),
                "flagged_subcase": row.map(|c| json!(c.flagged_subcase)).unwrap_or(Value::Null),
            })
        })
        .collect();
    let summary = match &closed_form {
        Some(rows) => {
            let disagreements: Vec<u64> = rows
                .iter()
                .filter(|c| !c.agree)
                .map(|c| c.prime)
                .collect();
            let flagged: Vec<u64> = rows
                .iter()
                .filter(|c| !c.agree && c.flagged_subcase)
                .map(|c| c.prime)
                .collect();
            let unflagged: Vec<u64> = rows
                .iter()
                .filter(|c| !c.agree && !c.flagged_subcase)
                .map(|c| c.prime)
                .collect();
            json!({
                "agreements": rows.len() - disagreements.len(),
                "disagreements": disagreements,
                "flagged_subcase_disagreements": flagged,
                "other_disagreements": unflagged,
            })
        }
        None => Value::Null,
    };
    let payload = json!({
        "prime_bound": prime_bound,
        "coefficient_bound": coeffs,
        "per_prime": per_prime,
        "closed_form_summary": summary,
        "coefficients": series,
    });
    print_envelope("zeta-ratio", params, payload);
    Ok(())
}

fn cmd_unit_value(params: &FieldParams, p2_interpretation: bool) -> Result<(), Error> {
    let u = eval_unit(params, 53, p2_interpretation)?;
    let payload = json!({
        "re": u.re,
        "im": u.im,
        "precision_bits": u.precision_bits,
        "p2_interpretation": p2_interpretation,
    });
    print_envelope("unit-value", params, payload);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    let pair = |args: &PairArgs| -> Result<FieldParams, Error> { FieldParams::new(args.p, args.q) };
    let seed = |args: &PairArgs, params: &FieldParams| -> bool {
        if args.seed_conventions {
            print_envelope("seed-conventions", params, conventions(params));
            true
        } else {
            false
        }
    };
    macro_rules! with_params {
        ($args:expr, $body:expr) => {{
            let params = pair($args)?;
            if !seed($args, &params) {
                $body(&params)?;
            }
            Ok(())
        }};
    }
    match &cli.cmd {
        Cmd::Classify(args) => with_params!(args, |p: &FieldParams| cmd_classify(p)),
        Cmd::Group(args) => with_params!(args, |p: &FieldParams| cmd_group(p)),
        Cmd::Reps(args) => with_params!(args, |p: &FieldParams| cmd_reps(p)),
        Cmd::CharTable(args) => with_params!(args, |p: &FieldParams| cmd_char_table(p)),
        Cmd::Frobenius { pair: args, ell } => {
            with_params!(args, |p: &FieldParams| cmd_frobenius(p, *ell))
        }
        Cmd::Lfactor { pair: args, j, ell } => {
            with_params!(args, |p: &FieldParams| cmd_lfactor(p, *j, *ell))
        }
        Cmd::Lfunction {
            pair: args,
            j,
            prime_bound,
            coeffs,
            format,
        } => with_params!(args, |p: &FieldParams| cmd_lfunction(
            p,
            *j,
            *prime_bound,
            *coeffs,
            *format
        )),
        Cmd::ZetaRatio {
            pair: args,
            prime_bound,
            coeffs,
        } => with_params!(args, |p: &FieldParams| cmd_zeta_ratio(
            p,
            *prime_bound,
            *coeffs
        )),
        Cmd::UnitValue {
            pair: args,
            p2_interpretation,
        } => with_params!(args, |p: &FieldParams| cmd_unit_value(
            p,
            *p2_interpretation
        )),
    }
}

fn main() {
    if let Ok(v) = std::env::var("QCYCLO_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Inconsistency(_) => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}
