use num_traits::{One, Zero};

use super::parse::Expr;
use crate::arith::Int;
use crate::cobar::{CobarElem, RElem};
use crate::error::{Error, Result};
use crate::fgl::{mult_coeff_closed_form, BetaVec};
use crate::hopf::{HElem, TensorH};
use crate::numpoly::NumPoly;

/// Where an expression is interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    F,
    H,
    Cobar(usize),
    Beta,
}

impl Context {
    fn name(self) -> String {
        match self {
            Context::F => "F".into(),
            Context::H => "H".into(),
            Context::Cobar(n) => format!("cobar({n})"),
            Context::Beta => "beta".into(),
        }
    }
}

/// A typed result of evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    F(NumPoly),
    H(HElem),
    Cobar(CobarElem),
    Beta(BetaVec),
}

/// Largest exponent accepted in `x^k`.
pub const MAX_EXPONENT: i64 = 64;

trait Ring: Sized + Clone {
    fn from_int(n: &Int) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Ring for NumPoly {
    fn from_int(n: &Int) -> Self {
        NumPoly::constant(n.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for HElem {
    fn from_int(n: &Int) -> Self {
        HElem::from_f(NumPoly::constant(n.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for RElem {
    fn from_int(n: &Int) -> Self {
        RElem::constant(n.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for BetaVec {
    fn from_int(n: &Int) -> Self {
        BetaVec::term(0, RElem::constant(n.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    /// `beta_i beta_j = sum_k a_{ij}^k beta_k` for the multiplicative law.
    fn mul(&self, o: &Self) -> Self {
        let mut out = BetaVec::zero();
        for (i, c) in self.terms() {
            for (j, d) in o.terms() {
                let cd = c * d;
                for k in i.max(j)..=i + j {
                    out.add_term(k, &cd * &mult_coeff_closed_form(k, i, j));
                }
            }
        }
        out
    }
}

fn violation(atom: &str, ctx: Context) -> Error {
    Error::ContextViolation { atom: atom.to_string(), context: ctx.name() }
}

fn pow<R: Ring>(base: &R, e: i64) -> R {
    (0..e).fold(R::from_int(&Int::one()), |acc, _| acc.mul(base))
}

/// Evaluates the ring operations generically; `atom` handles leaves and negative powers.
fn eval_ring<R: Ring>(
    e: &Expr,
    ctx: Context,
    atom: &dyn Fn(&Expr) -> Option<Result<R>>,
) -> Result<R> {
    if let Some(r) = atom(e) {
        return r;
    }
    let go = |x: &Expr| eval_ring(x, ctx, atom);
    match e {
        Expr::Int(n) => Ok(R::from_int(n)),
        Expr::Neg(x) => Ok(R::from_int(&Int::zero()).sub(&go(x)?)),
        Expr::Add(a, b) => Ok(go(a)?.add(&go(b)?)),
        Expr::Sub(a, b) => Ok(go(a)?.sub(&go(b)?)),
        Expr::Mul(a, b) => Ok(go(a)?.mul(&go(b)?)),
        Expr::Pow(b, k) if (0..=MAX_EXPONENT).contains(k) => Ok(pow(&go(b)?, *k)),
        Expr::Pow(b, k) if *k > MAX_EXPONENT => Err(Error::InvalidArgument(format!(
            "exponent {k} of {b} exceeds {MAX_EXPONENT}"
        ))),
        Expr::Pow(b, k) => Err(violation(&format!("{b}^{k}"), ctx)),
        Expr::Tensor(..) => Err(violation("ox", ctx)),
        Expr::Alpha(n) => Err(violation(&format!("a({n})"), ctx)),
        Expr::Beta(n) => Err(violation(&format!("b({n})"), ctx)),
        Expr::T => Err(violation("t", ctx)),
        Expr::U => Err(violation("u", ctx)),
    }
}

pub fn eval_f(e: &Expr) -> Result<NumPoly> {
    eval_ring(e, Context::F, &|x| match x {
        Expr::Alpha(n) => Some(Ok(NumPoly::alpha(*n))),
        Expr::T => Some(Ok(NumPoly::t())),
        _ => None,
    })
}

fn eval_h_in(e: &Expr, ctx: Context) -> Result<HElem> {
    eval_ring(e, ctx, &|x| match x {
        Expr::Alpha(n) => Some(Ok(HElem::alpha(*n))),
        Expr::T => Some(Ok(HElem::alpha(1))),
        Expr::Pow(b, k) if **b == Expr::T && *k < 0 => Some(if -*k > MAX_EXPONENT {
            Err(Error::InvalidArgument(format!("exponent {k} exceeds {MAX_EXPONENT}")))
        } else {
            Ok(HElem::t_pow(*k))
        }),
        _ => None,
    })
}

pub fn eval_h(e: &Expr) -> Result<HElem> {
    eval_h_in(e, Context::H)
}

fn eval_r_in(e: &Expr, ctx: Context) -> Result<RElem> {
    eval_ring(e, ctx, &|x| match x {
        Expr::U => Some(Ok(RElem::u())),
        Expr::Pow(b, k) if **b == Expr::U => Some(Ok(RElem::u_pow(*k))),
        _ => None,
    })
}

pub fn eval_r(e: &Expr) -> Result<RElem> {
    eval_r_in(e, Context::Cobar(0))
}

pub fn eval_beta(e: &Expr) -> Result<BetaVec> {
    eval_ring(e, Context::Beta, &|x| match x {
        Expr::Beta(n) => Some(Ok(BetaVec::basis(*n))),
        Expr::U => Some(Ok(BetaVec::term(0, RElem::u()))),
        Expr::Pow(b, k) if **b == Expr::U => Some(Ok(BetaVec::term(0, RElem::u_pow(*k)))),
        _ => None,
    })
}

fn contains_tensor(e: &Expr) -> bool {
    match e {
        Expr::Tensor(..) => true,
        Expr::Neg(x) | Expr::Pow(x, _) => contains_tensor(x),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => contains_tensor(a) || contains_tensor(b),
        _ => false,
    }
}

fn flatten_tensor<'e>(e: &'e Expr, out: &mut Vec<&'e Expr>) {
    match e {
        Expr::Tensor(a, b) => {
            flatten_tensor(a, out);
            out.push(b);
        }
        e => out.push(e),
    }
}

/// Evaluates in `C^n = R (x) H^{(x)n}`: sums of `r ox h_1 ox ... ox h_n`.
pub fn eval_cobar(e: &Expr, n: usize) -> Result<CobarElem> {
    let ctx = Context::Cobar(n);
    match e {
        Expr::Add(a, b) if contains_tensor(e) => Ok(&eval_cobar(a, n)? + &eval_cobar(b, n)?),
        Expr::Sub(a, b) if contains_tensor(e) => Ok(&eval_cobar(a, n)? - &eval_cobar(b, n)?),
        Expr::Neg(a) if contains_tensor(e) => Ok(-&eval_cobar(a, n)?),
        Expr::Tensor(..) => {
            let mut parts = Vec::new();
            flatten_tensor(e, &mut parts);
            if parts.len() != n + 1 {
                return Err(Error::DegreeMismatch { expected: n + 1, found: parts.len() });
            }
            let r = eval_r_in(parts[0], ctx)?;
            let hs = parts[1..]
                .iter()
                .map(|p| eval_h_in(p, ctx))
                .collect::<Result<Vec<_>>>()?;
            let t = TensorH::from_factors(&hs);
            let mut out = CobarElem::zero(n);
            for (a, c) in r.terms() {
                out.add_tensor(a, t.scale(c));
            }
            Ok(out)
        }
        e if contains_tensor(e) => Err(violation("ox", ctx)),
        e if n == 0 => Ok(CobarElem::from_r(&eval_r_in(e, ctx)?, 0)),
        _ => Err(Error::DegreeMismatch { expected: n + 1, found: 1 }),
    }
}

/// Evaluates `e` in `ctx` with all normalizations applied.
pub fn eval_expr(e: &Expr, ctx: Context) -> Result<Element> {
    Ok(match ctx {
        Context::F => Element::F(eval_f(e)?),
        Context::H => Element::H(eval_h(e)?),
        Context::Cobar(n) => Element::Cobar(eval_cobar(e, n)?),
        Context::Beta => Element::Beta(eval_beta(e)?),
    })
}
