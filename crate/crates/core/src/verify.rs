//! Randomized verification suites: the identity catalogue, algebra laws and
//! the differential comparison against the rewrite oracle.
//!
//! Every check draws its own random space and inputs from a seeded
//! generator and compares both sides exactly.

use std::fmt::Debug;
use std::hash::{Hash, Hasher};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::clifford::{self, cl_bracket, cl_mul};
use crate::clw::{self, clw_mul, lie_bracket, super_bracket, ClwElem};
use crate::error::Error;
use crate::exterior::{self, wedge, Blade, ExtElem, Variant};
use crate::oracle::Oracle;
use crate::parity::Bracket;
use crate::random;
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::star::StarContext;
use crate::symmetric::{self, vee, SymElem};
use crate::weyl::{wl_bracket, wl_mul};

/// A failed comparison, or an unexpected error from the code under test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("unexpected error: {e}"))
    }
}

pub type Outcome = Result<(), Failure>;

/// Random state and optional size overrides for one suite run.
pub struct Ctx {
    pub rng: StdRng,
    pub max_order: Option<usize>,
    pub dims: Option<(usize, usize)>,
}

impl Ctx {
    pub fn new(seed: u64) -> Self {
        Ctx { rng: StdRng::seed_from_u64(seed), max_order: None, dims: None }
    }

    fn order(&self, default: usize) -> usize {
        self.max_order.unwrap_or(default)
    }

    fn dims(&self, default: (usize, usize)) -> (usize, usize) {
        self.dims.unwrap_or(default)
    }

    fn upto(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi.max(lo))
    }
}

/// A named randomized check.
#[derive(Clone, Copy)]
pub struct Law {
    pub name: &'static str,
    pub check: fn(&mut Ctx) -> Outcome,
}

/// Run `cases` instances. The generator is seeded from `seed` and the law
/// name so laws stay independent of catalogue order.
pub fn run(law: &Law, cases: usize, seed: u64, max_order: Option<usize>, dims: Option<(usize, usize)>) -> Result<(), String> {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    law.name.hash(&mut h);
    let mut ctx = Ctx { rng: StdRng::seed_from_u64(seed ^ h.finish()), max_order, dims };
    for case in 0..cases {
        if let Err(Failure(msg)) = (law.check)(&mut ctx) {
            return Err(format!("{} failed on case {case}: {msg}", law.name));
        }
    }
    Ok(())
}

fn same<T: PartialEq + Debug>(what: &str, lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure(format!("{what}: {lhs:?} != {rhs:?}")))
    }
}

fn pm(e: usize) -> Scalar {
    if e % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn two() -> Scalar {
    Scalar::from(2)
}

// ---------------------------------------------------------------- spaces

fn ext_space(c: &mut Ctx) -> SuperSpace {
    let n = c.upto(1, 4);
    random::space_of(&mut c.rng, n, 0)
}

fn sym_space(c: &mut Ctx) -> SuperSpace {
    let m = c.upto(1, 2);
    random::space_of(&mut c.rng, 0, m)
}

fn clw_space(c: &mut Ctx) -> SuperSpace {
    let n0 = c.upto(1, 3);
    let m = c.upto(1, 2);
    random::space_of(&mut c.rng, n0, m)
}

/// A Euclidean or Witt space, which carries a star pairing.
fn star_space(c: &mut Ctx) -> SuperSpace {
    if c.rng.gen_bool(0.5) {
        let n0 = c.upto(1, 3);
        let m = c.upto(0, 2);
        SuperSpace::euclidean(n0, m)
    } else {
        let n = c.upto(0, 1);
        let odd = c.rng.gen_bool(0.5) || n == 0;
        let m = c.upto(0, 2);
        SuperSpace::witt(n, odd, m)
    }
}

// ---------------------------------------------------------------- exterior

fn ev(c: &mut Ctx, sp: &SuperSpace) -> ExtElem {
    random::ext(&mut c.rng, sp.n0(), &[1], 3)
}

fn eh(c: &mut Ctx, sp: &SuperSpace, k: usize) -> ExtElem {
    random::ext(&mut c.rng, sp.n0(), &[k], 3)
}

fn ea(c: &mut Ctx, sp: &SuperSpace, max: usize) -> ExtElem {
    random::ext_upto(&mut c.rng, sp.n0(), max, 4)
}

/// Homogeneous parity-`p` element of orders up to 4.
fn ep(c: &mut Ctx, sp: &SuperSpace, p: usize) -> ExtElem {
    let orders: Vec<usize> = (0..=4).filter(|k| k % 2 == p).collect();
    random::ext(&mut c.rng, sp.n0(), &orders, 4)
}

fn ei(sp: &SuperSpace, v: &ExtElem, y: &ExtElem) -> Result<ExtElem, Failure> {
    Ok(exterior::insert_vec(sp, v, y)?)
}

fn ew(x: &ExtElem, y: &ExtElem) -> Result<ExtElem, Failure> {
    Ok(wedge(x, y)?)
}

/// `i⁽ˡ⁾_x y`, zero when `l` is negative or exceeds the order of `x`.
fn eg(sp: &SuperSpace, x: &ExtElem, l: isize, y: &ExtElem) -> Result<ExtElem, Failure> {
    match x.homogeneous_order() {
        _ if x.is_zero() || l < 0 => Ok(ExtElem::zero(y.dim())),
        Some(k) if l as usize > k => Ok(ExtElem::zero(y.dim())),
        _ => Ok(exterior::insert_graded(sp, x, l as usize, y)?),
    }
}

fn ef(sp: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<ExtElem, Failure> {
    Ok(exterior::insert_full(sp, x, y, Variant::Plain)?)
}

fn efa(sp: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<ExtElem, Failure> {
    Ok(exterior::insert_full(sp, x, y, Variant::Alt)?)
}

fn e_in(sp: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<Scalar, Failure> {
    Ok(exterior::inner(sp, x, y)?)
}

fn e_new(sp: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<Scalar, Failure> {
    Ok(clifford::cl_inner_new(sp, x, y)?)
}

fn cm(sp: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<ExtElem, Failure> {
    Ok(cl_mul(sp, x, y)?)
}

fn wedge_involutions_respect_products(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y) = (ea(c, &sp, 3), ea(c, &sp, 3));
    let xy = ew(&x, &y)?;
    same("prime", xy.prime(), ew(&x.prime(), &y.prime())?)?;
    same("opp", xy.opp(), ew(&y.opp(), &x.opp())?)?;
    same("bar", xy.bar(), ew(&y.bar(), &x.bar())?)
}

fn vector_insertion_against_involutions(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let v = ev(c, &sp);
    let x = ea(c, &sp, 4);
    let ix = ei(&sp, &v, &x)?;
    same("prime", ix.prime(), ei(&sp, &v, &x.prime())?.neg())?;
    same("opp", ix.opp(), ei(&sp, &v, &x.bar())?.neg())?;
    same("bar", ix.bar(), ei(&sp, &v, &x.opp())?)
}

fn vector_insertion_is_adjoint_to_wedge(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let v = ev(c, &sp);
    let (x, y) = (ea(c, &sp, 4), ea(c, &sp, 4));
    same("adjoint", e_in(&sp, &ei(&sp, &v, &x)?, &y)?, e_in(&sp, &x, &ew(&v, &y)?)?)
}

fn multi_insertion_composes_vector_insertions(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let vs: Vec<ExtElem> = (0..k).map(|_| ev(c, &sp)).collect();
    let y = ea(c, &sp, 4);
    let mut x = ExtElem::one(sp.n0());
    let mut composed = y.clone();
    for v in &vs {
        x = ew(&x, v)?;
        composed = ei(&sp, v, &composed)?;
    }
    same("composition", exterior::insert_multi(&sp, &x, &y)?, composed)
}

fn multi_insertion_is_adjoint_to_wedge(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y, z) = (ea(c, &sp, 3), ea(c, &sp, 4), ea(c, &sp, 3));
    same("adjoint", e_in(&sp, &exterior::insert_multi(&sp, &x, &y)?, &z)?, e_in(&sp, &y, &ew(&x, &z)?)?)
}

fn equal_order_insertion_is_inner_product(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, sp.n0());
    let (x, y) = (eh(c, &sp, k), eh(c, &sp, k));
    same("pairing", exterior::insert_multi(&sp, &x, &y)?, ExtElem::scalar(sp.n0(), e_in(&sp, &x, &y)?))
}

fn graded_insertion_swaps_arguments(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (k, m) = (c.upto(0, 3), c.upto(0, 3));
    let (x, y) = (eh(c, &sp, k), eh(c, &sp, m));
    for l in 0..=k.min(m) {
        let rhs = eg(&sp, &y, l as isize, &x)?.scale(&pm((k - l) * (m - l)));
        same(&format!("l = {l}"), eg(&sp, &x, l as isize, &y)?, rhs)?;
    }
    Ok(())
}

fn graded_insertion_by_wedge_with_vector(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (ev(c, &sp), eh(c, &sp, k), ea(c, &sp, 4));
    let vx = ew(&v, &x)?;
    let iy = ei(&sp, &v, &y)?;
    for l in 0..=(k + 1) as isize {
        let lhs = eg(&sp, &vx, l, &y)?;
        let a = ew(&v, &eg(&sp, &x, l, &y)?)?.scale(&pm(l as usize));
        let b = eg(&sp, &x, l - 1, &iy)?.scale(&pm((l + 1) as usize));
        same(&format!("l = {l}"), lhs, a.add(&b))?;
    }
    Ok(())
}

fn vector_insertion_after_graded_insertion(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (ev(c, &sp), eh(c, &sp, k), ea(c, &sp, 4));
    let ivx = ei(&sp, &v, &x)?;
    let ivy = ei(&sp, &v, &y)?;
    for l in 0..=k as isize {
        let lhs = ei(&sp, &v, &eg(&sp, &x, l, &y)?)?;
        let a = eg(&sp, &ivx, l, &y)?.scale(&pm(l as usize));
        let b = eg(&sp, &x, l, &ivy)?.scale(&pm(k));
        same(&format!("l = {l}"), lhs, a.add(&b))?;
    }
    Ok(())
}

fn graded_insertion_into_wedge_with_vector(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (ev(c, &sp), eh(c, &sp, k), ea(c, &sp, 3));
    let ivx = ei(&sp, &v, &x)?;
    let vy = ew(&v, &y)?;
    for l in 0..=k as isize {
        let lhs = eg(&sp, &x, l, &vy)?;
        let a = ew(&v, &eg(&sp, &x, l, &y)?)?.scale(&pm(k));
        let b = eg(&sp, &ivx, l - 1, &y)?.scale(&pm((l + 1) as usize));
        same(&format!("l = {l}"), lhs, a.add(&b))?;
    }
    Ok(())
}

fn generalized_insertion_by_wedge_with_vector(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (ev(c, &sp), eh(c, &sp, k), ea(c, &sp, 4));
    let vx = ew(&v, &x)?;
    let iy = ei(&sp, &v, &y)?;
    same("plain", ef(&sp, &vx, &y)?, ew(&v, &efa(&sp, &x, &y)?)?.add(&efa(&sp, &x, &iy)?))?;
    same("alt", efa(&sp, &vx, &y)?, ew(&v, &ef(&sp, &x, &y)?)?.sub(&ef(&sp, &x, &iy)?))
}

fn vector_insertion_after_generalized_insertion(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (ev(c, &sp), eh(c, &sp, k), ea(c, &sp, 4));
    let ivx = ei(&sp, &v, &x)?;
    let ivy = ei(&sp, &v, &y)?;
    let s = pm(k);
    same("plain", ei(&sp, &v, &ef(&sp, &x, &y)?)?, efa(&sp, &ivx, &y)?.add(&ef(&sp, &x, &ivy)?.scale(&s)))?;
    same("alt", ei(&sp, &v, &efa(&sp, &x, &y)?)?, ef(&sp, &ivx, &y)?.add(&efa(&sp, &x, &ivy)?.scale(&s)))
}

fn generalized_insertion_into_wedge_with_vector(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (ev(c, &sp), eh(c, &sp, k), ea(c, &sp, 3));
    let ivx = ei(&sp, &v, &x)?;
    let vy = ew(&v, &y)?;
    let s = pm(k);
    same("plain", ef(&sp, &x, &vy)?, ew(&v, &ef(&sp, &x, &y)?)?.scale(&s).add(&efa(&sp, &ivx, &y)?))?;
    same("alt", efa(&sp, &x, &vy)?, ew(&v, &efa(&sp, &x, &y)?)?.scale(&s).sub(&ef(&sp, &ivx, &y)?))
}

fn generalized_insertion_symmetry_for_equal_parity(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let p = c.upto(0, 1);
    let (x, y) = (ep(c, &sp, p), ep(c, &sp, p));
    let rhs = efa(&sp, &y, &x)?;
    same("swap", ef(&sp, &x, &y)?, if p == 0 { rhs } else { rhs.neg() })
}

fn generalized_insertion_symmetry_for_mixed_parity(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let p = c.upto(0, 1);
    let (x, y) = (ep(c, &sp, p), ep(c, &sp, 1 - p));
    same("plain", ef(&sp, &x, &y)?, ef(&sp, &y, &x)?)?;
    same("alt", efa(&sp, &x, &y)?, efa(&sp, &y, &x)?)
}

fn clifford_product_involutions(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y) = (ea(c, &sp, 4), ea(c, &sp, 4));
    let xy = cm(&sp, &x, &y)?;
    same("prime", xy.prime(), cm(&sp, &x.prime(), &y.prime())?)?;
    same("opp", xy.opp(), cm(&sp, &y.opp(), &x.opp())?)?;
    same("bar", xy.bar(), cm(&sp, &y.bar(), &x.bar())?)
}

fn vector_times_multivector(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (v, y) = (ev(c, &sp), ea(c, &sp, 4));
    same("left", cm(&sp, &v, &y)?, ew(&v, &y)?.add(&ei(&sp, &v, &y)?))
}

fn multivector_times_vector(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 4);
    let (v, y) = (ev(c, &sp), eh(c, &sp, k));
    same("right", cm(&sp, &y, &v)?, ew(&y, &v)?.sub(&ei(&sp, &v, &y)?.scale(&pm(k))))
}

fn clifford_vector_super_bracket_is_twice_insertion(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (v, y) = (ev(c, &sp), ea(c, &sp, 4));
    same("bracket", cl_bracket(&sp, &v, &y, Bracket::Super)?, ei(&sp, &v, &y)?.scale(&two()))
}

fn clifford_super_bracket_as_odd_graded_insertions(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 4);
    let (x, y) = (eh(c, &sp, k), ea(c, &sp, 4));
    let lhs = cl_bracket(&sp, &x, &y, Bracket::Super)?;
    let mid = efa(&sp, &x, &y)?.sub(&ef(&sp, &x, &y)?).scale(&pm(k));
    same("difference form", lhs.clone(), mid)?;
    let mut odd = ExtElem::zero(sp.n0());
    for l in (1..=k).step_by(2) {
        odd = odd.add(&eg(&sp, &x, l as isize, &y)?);
    }
    same("odd sum form", lhs, odd.scale(&(&pm(k + 1) * &two())))
}

fn order_two_bracket_as_first_graded_insertion(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (u, v, y) = (ev(c, &sp), ev(c, &sp), ea(c, &sp, 4));
    let uv = ew(&u, &v)?;
    let lie = cl_bracket(&sp, &uv, &y, Bracket::Lie)?;
    same("super", lie.clone(), cl_bracket(&sp, &uv, &y, Bracket::Super)?)?;
    same("graded", lie.clone(), eg(&sp, &uv, 1, &y)?.scale(&Scalar::from(-2)))?;
    let rhs = ew(&u, &ei(&sp, &v, &y)?)?.sub(&ew(&v, &ei(&sp, &u, &y)?)?).scale(&two());
    same("expanded", lie, rhs)
}

fn order_two_bracket_is_wedge_derivation(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let x = eh(c, &sp, 2);
    let k = c.upto(0, 4);
    let ys: Vec<ExtElem> = (0..k).map(|_| ev(c, &sp)).collect();
    let wedge_all = |vs: &[ExtElem]| -> Result<ExtElem, Failure> { vs.iter().try_fold(ExtElem::one(sp.n0()), |acc, v| ew(&acc, v)) };
    let lhs = cl_bracket(&sp, &x, &wedge_all(&ys)?, Bracket::Lie)?;
    let mut rhs = ExtElem::zero(sp.n0());
    for i in 0..k {
        let mut vs = ys.clone();
        vs[i] = cl_bracket(&sp, &x, &ys[i], Bracket::Lie)?;
        rhs = rhs.add(&wedge_all(&vs)?);
    }
    same("derivation", lhs, rhs)
}

fn graded_insertion_adjoint(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (x, y, z) = (eh(c, &sp, k), ea(c, &sp, 4), ea(c, &sp, 4));
    let xo = x.opp();
    for l in 0..=k {
        let lhs = e_in(&sp, &eg(&sp, &x, l as isize, &y)?, &z)?;
        let rhs = e_in(&sp, &y, &eg(&sp, &xo, (k - l) as isize, &z)?)?;
        same(&format!("l = {l}"), lhs, rhs)?;
    }
    Ok(())
}

fn generalized_insertion_adjoint(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let k = c.upto(0, 3);
    let (x, y, z) = (eh(c, &sp, k), ea(c, &sp, 4), ea(c, &sp, 4));
    same("plain", e_in(&sp, &ef(&sp, &x, &y)?, &z)?, e_in(&sp, &y, &ef(&sp, &x.opp(), &z)?)?)?;
    same("alt", e_in(&sp, &efa(&sp, &x, &y)?, &z)?, &pm(k) * &e_in(&sp, &y, &efa(&sp, &x.opp(), &z)?)?)
}

fn clifford_product_adjoints(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y, z) = (ea(c, &sp, 3), ea(c, &sp, 3), ea(c, &sp, 3));
    let lhs = e_in(&sp, &cm(&sp, &x, &y)?, &z)?;
    same("right", lhs.clone(), e_in(&sp, &x, &cm(&sp, &z, &y.opp())?)?)?;
    same("left", lhs, e_in(&sp, &y, &cm(&sp, &x.opp(), &z)?)?)
}

fn clifford_bracket_adjoint(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y, z) = (ea(c, &sp, 3), ea(c, &sp, 3), ea(c, &sp, 3));
    let lhs = e_in(&sp, &cl_bracket(&sp, &x, &y, Bracket::Lie)?, &z)?;
    same("bracket", lhs, e_in(&sp, &x, &cl_bracket(&sp, &z, &y.opp(), Bracket::Lie)?)?)
}

fn shifted_inner_product_is_cyclic(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y, z) = (ea(c, &sp, 3), ea(c, &sp, 3), ea(c, &sp, 3));
    let lhs = e_new(&sp, &cm(&sp, &x, &y)?, &z)?;
    same("shift", lhs.clone(), e_new(&sp, &x, &cm(&sp, &y, &z)?)?)?;
    same("cycle", lhs, e_new(&sp, &y, &cm(&sp, &z, &x)?)?)
}

fn shifted_inner_product_is_bracket_invariant(c: &mut Ctx) -> Outcome {
    let sp = ext_space(c);
    let (x, y, z) = (ea(c, &sp, 3), ea(c, &sp, 3), ea(c, &sp, 3));
    let lhs = e_new(&sp, &cl_bracket(&sp, &x, &y, Bracket::Lie)?, &z)?;
    same("invariance", lhs, e_new(&sp, &x, &cl_bracket(&sp, &y, &z, Bracket::Lie)?)?)
}

// ---------------------------------------------------------------- symmetric

fn sv(c: &mut Ctx, sp: &SuperSpace) -> SymElem {
    random::sym(&mut c.rng, sp.n1(), &[1], 3)
}

fn sh(c: &mut Ctx, sp: &SuperSpace, k: usize) -> SymElem {
    random::sym(&mut c.rng, sp.n1(), &[k], 3)
}

fn sa(c: &mut Ctx, sp: &SuperSpace, max: usize) -> SymElem {
    random::sym_upto(&mut c.rng, sp.n1(), max, 4)
}

fn si(sp: &SuperSpace, v: &SymElem, y: &SymElem) -> Result<SymElem, Failure> {
    Ok(symmetric::insert_vec(sp, v, y)?)
}

fn sw(x: &SymElem, y: &SymElem) -> Result<SymElem, Failure> {
    Ok(vee(x, y)?)
}

fn sg(sp: &SuperSpace, x: &SymElem, l: isize, y: &SymElem) -> Result<SymElem, Failure> {
    match x.homogeneous_order() {
        _ if x.is_zero() || l < 0 => Ok(SymElem::zero(y.dim())),
        Some(k) if l as usize > k => Ok(SymElem::zero(y.dim())),
        _ => Ok(symmetric::insert_graded(sp, x, l as usize, y)?),
    }
}

fn sf(sp: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<SymElem, Failure> {
    Ok(symmetric::insert_full(sp, x, y, Variant::Plain)?)
}

fn sfa(sp: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<SymElem, Failure> {
    Ok(symmetric::insert_full(sp, x, y, Variant::Alt)?)
}

fn s_in(sp: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<Scalar, Failure> {
    Ok(symmetric::inner(sp, x, y)?)
}

fn wm(sp: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<SymElem, Failure> {
    Ok(wl_mul(sp, x, y)?)
}

fn symmetric_vector_insertion_adjoint(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, x, y) = (sv(c, &sp), sa(c, &sp, 4), sa(c, &sp, 3));
    same("adjoint", s_in(&sp, &si(&sp, &v, &x)?, &y)?, -s_in(&sp, &x, &sw(&v, &y)?)?)
}

fn equal_order_symmetric_insertion_is_pairing(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (xi, eta) = (sh(c, &sp, k), sh(c, &sp, k));
    let lhs = symmetric::insert_multi(&sp, &eta, &xi)?;
    same("pairing", lhs.clone(), SymElem::scalar(sp.n1(), s_in(&sp, &eta, &xi)?))?;
    same("swapped pairing", lhs, SymElem::scalar(sp.n1(), &pm(k) * &s_in(&sp, &xi, &eta)?))
}

fn symmetric_multi_insertion_adjoint(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (sh(c, &sp, k), sa(c, &sp, 4), sa(c, &sp, 3));
    let lhs = s_in(&sp, &symmetric::insert_multi(&sp, &v, &x)?, &y)?;
    same("adjoint", lhs, &pm(k) * &s_in(&sp, &x, &sw(&v, &y)?)?)
}

fn weyl_vector_bracket_is_twice_insertion(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, y) = (sv(c, &sp), sa(c, &sp, 4));
    same("bracket", wl_bracket(&sp, &v, &y, Bracket::Lie)?, si(&sp, &v, &y)?.scale(&two()))
}

fn weyl_vector_times_multivector(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, y) = (sv(c, &sp), sa(c, &sp, 4));
    same("left", wm(&sp, &v, &y)?, sw(&v, &y)?.add(&si(&sp, &v, &y)?))
}

fn weyl_symmetrized_vector_product(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, y) = (sv(c, &sp), sa(c, &sp, 4));
    let (vy, yv) = (wm(&sp, &v, &y)?, wm(&sp, &y, &v)?);
    same("symmetrization", sw(&v, &y)?, vy.add(&yv).scale(&Scalar::rational(1, 2)))?;
    same("right", yv, sw(&y, &v)?.sub(&si(&sp, &v, &y)?))
}

fn symmetric_graded_insertion_by_vee_with_vector(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (sv(c, &sp), sh(c, &sp, k), sa(c, &sp, 4));
    let vx = sw(&v, &x)?;
    let iy = si(&sp, &v, &y)?;
    for l in 0..=(k + 1) as isize {
        let rhs = sw(&v, &sg(&sp, &x, l, &y)?)?.add(&sg(&sp, &x, l - 1, &iy)?);
        same(&format!("l = {l}"), sg(&sp, &vx, l, &y)?, rhs)?;
    }
    Ok(())
}

fn symmetric_vector_insertion_after_graded_insertion(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (sv(c, &sp), sh(c, &sp, k), sa(c, &sp, 4));
    let ivx = si(&sp, &v, &x)?;
    let ivy = si(&sp, &v, &y)?;
    for l in 0..=k as isize {
        let lhs = si(&sp, &v, &sg(&sp, &x, l, &y)?)?;
        same(&format!("l = {l}"), lhs, sg(&sp, &ivx, l, &y)?.add(&sg(&sp, &x, l, &ivy)?))?;
    }
    Ok(())
}

fn symmetric_graded_insertion_into_vee_with_vector(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (v, x, y) = (sv(c, &sp), sh(c, &sp, k), sa(c, &sp, 3));
    let ivx = si(&sp, &v, &x)?;
    let vy = sw(&v, &y)?;
    for l in 0..=k as isize {
        let rhs = sw(&v, &sg(&sp, &x, l, &y)?)?.sub(&sg(&sp, &ivx, l - 1, &y)?);
        same(&format!("l = {l}"), sg(&sp, &x, l, &vy)?, rhs)?;
    }
    Ok(())
}

fn symmetric_generalized_insertion_sums(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (x, y) = (sh(c, &sp, k), sa(c, &sp, 4));
    let mut plain = SymElem::zero(sp.n1());
    let mut alt = SymElem::zero(sp.n1());
    for l in 0..=k {
        let t = symmetric::insert_graded_shuffle(&sp, &x, l, &y)?;
        plain = plain.add(&t);
        alt = alt.add(&t.scale(&pm(l)));
    }
    same("plain", sf(&sp, &x, &y)?, plain)?;
    same("alt", sfa(&sp, &x, &y)?, alt)?;
    same("swap", sf(&sp, &x, &y)?, sfa(&sp, &y, &x)?)
}

fn symmetric_vector_generalized_insertion_is_product(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, y) = (sv(c, &sp), sa(c, &sp, 4));
    let full = sf(&sp, &v, &y)?;
    same("expansion", full.clone(), sw(&v, &y)?.add(&si(&sp, &v, &y)?))?;
    same("product", full, wm(&sp, &v, &y)?)
}

fn symmetric_generalized_insertion_by_vee_with_vector(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, x, y) = (sv(c, &sp), sa(c, &sp, 3), sa(c, &sp, 4));
    let rhs = sw(&v, &sf(&sp, &x, &y)?)?.add(&sf(&sp, &x, &si(&sp, &v, &y)?)?);
    same("recursion", sf(&sp, &sw(&v, &x)?, &y)?, rhs)
}

fn symmetric_vector_insertion_after_generalized_insertion(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, x, y) = (sv(c, &sp), sa(c, &sp, 3), sa(c, &sp, 4));
    let rhs = sf(&sp, &si(&sp, &v, &x)?, &y)?.add(&sf(&sp, &x, &si(&sp, &v, &y)?)?);
    same("recursion", si(&sp, &v, &sf(&sp, &x, &y)?)?, rhs)
}

fn symmetric_generalized_insertion_into_vee_with_vector(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (v, x, y) = (sv(c, &sp), sa(c, &sp, 3), sa(c, &sp, 3));
    let rhs = sw(&v, &sf(&sp, &x, &y)?)?.sub(&sf(&sp, &si(&sp, &v, &x)?, &y)?);
    same("recursion", sf(&sp, &x, &sw(&v, &y)?)?, rhs)
}

fn weyl_bracket_as_odd_graded_insertions(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 4);
    let (x, y) = (sh(c, &sp, k), sa(c, &sp, 4));
    let lhs = wl_bracket(&sp, &x, &y, Bracket::Lie)?;
    same("swapped insertions", lhs.clone(), sf(&sp, &x, &y)?.sub(&sf(&sp, &y, &x)?))?;
    same("alternating form", lhs.clone(), sf(&sp, &x, &y)?.sub(&sfa(&sp, &x, &y)?))?;
    let mut odd = SymElem::zero(sp.n1());
    for l in (1..=k).step_by(2) {
        odd = odd.add(&sg(&sp, &x, l as isize, &y)?);
    }
    same("odd sum form", lhs, odd.scale(&two()))
}

fn weyl_order_two_bracket_is_first_graded_insertion(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (x, y) = (sh(c, &sp, 2), sa(c, &sp, 4));
    let lie = wl_bracket(&sp, &x, &y, Bracket::Lie)?;
    same("super", wl_bracket(&sp, &x, &y, Bracket::Super)?, lie.clone())?;
    same("graded", lie, sg(&sp, &x, 1, &y)?.scale(&two()))
}

fn symmetric_graded_insertion_adjoint(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (x, y, z) = (sh(c, &sp, k), sa(c, &sp, 3), sa(c, &sp, 4));
    for l in 0..=k {
        let lhs = s_in(&sp, &sg(&sp, &x, l as isize, &y)?, &z)?;
        let rhs = &pm(l) * &s_in(&sp, &y, &sg(&sp, &x, (k - l) as isize, &z)?)?;
        same(&format!("l = {l}"), lhs, rhs)?;
    }
    Ok(())
}

fn weyl_product_moves_across_inner_product(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let k = c.upto(0, 3);
    let (x, y, z) = (sh(c, &sp, k), sa(c, &sp, 3), sa(c, &sp, 3));
    same("move", s_in(&sp, &wm(&sp, &x, &y)?, &z)?, &pm(k) * &s_in(&sp, &y, &wm(&sp, &z, &x)?)?)
}

fn weyl_inner_product_is_associative(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (x, y, z) = (sa(c, &sp, 3), sa(c, &sp, 3), sa(c, &sp, 3));
    same("associativity", s_in(&sp, &wm(&sp, &x, &y)?, &z)?, s_in(&sp, &x, &wm(&sp, &y, &z)?)?)
}

fn weyl_inner_product_is_super_invariant(c: &mut Ctx) -> Outcome {
    let sp = sym_space(c);
    let (x, y, z) = (sa(c, &sp, 3), sa(c, &sp, 3), sa(c, &sp, 3));
    let lhs = s_in(&sp, &wl_bracket(&sp, &x, &y, Bracket::Super)?, &z)?;
    same("invariance", lhs, s_in(&sp, &x, &wl_bracket(&sp, &y, &z, Bracket::Super)?)?)
}

// ---------------------------------------------------------------- Clifford-Weyl

/// Simple tensor `x ⊗ ξ` with `x` of order parity `p` and `ξ` of order
/// parity `q`, returned with its factors.
fn simple(c: &mut Ctx, sp: &SuperSpace, p: usize, q: usize) -> (ExtElem, SymElem, ClwElem) {
    let eo: Vec<usize> = (0..=3).filter(|k| k % 2 == p).collect();
    let so: Vec<usize> = (0..=3).filter(|k| k % 2 == q).collect();
    let x = random::ext(&mut c.rng, sp.n0(), &eo, 2);
    let xi = random::sym(&mut c.rng, sp.n1(), &so, 2);
    let t = ClwElem::tensor(&x, &xi);
    (x, xi, t)
}

fn t(x: &ExtElem, xi: &SymElem) -> ClwElem {
    ClwElem::tensor(x, xi)
}

fn ca(c: &mut Ctx, sp: &SuperSpace, max: usize) -> ClwElem {
    random::clw(&mut c.rng, sp.n0(), sp.n1(), max, 4, None)
}

fn cp(c: &mut Ctx, sp: &SuperSpace, max: usize, p: usize) -> ClwElem {
    random::clw(&mut c.rng, sp.n0(), sp.n1(), max, 4, Some(p))
}

fn xm(sp: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<ClwElem, Failure> {
    Ok(clw_mul(sp, x, y)?)
}

fn x_in(sp: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<Scalar, Failure> {
    Ok(clw::inner(sp, x, y)?)
}

fn clw_lie_bracket_of_simple_tensors_without_signs(c: &mut Ctx) -> Outcome {
    // Both forms carry no signs, so they hold exactly on the sectors where
    // ord ξ·ord y and ord x·ord η are even.
    let sp = clw_space(c);
    let (p1, q1, p2, q2) = loop {
        let s = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
        if s.1 * s.2 == 0 && s.0 * s.3 == 0 {
            break s;
        }
    };
    let (x, xi, a) = simple(c, &sp, p1, q1);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let lhs = lie_bracket(&sp, &a, &b)?;
    let xy = cm(&sp, &x, &y)?;
    let yx = cm(&sp, &y, &x)?;
    let xe = wm(&sp, &xi, &eta)?;
    let ex = wm(&sp, &eta, &xi)?;
    let brx = xy.sub(&yx);
    let bre = xe.sub(&ex);
    same("first form", lhs.clone(), t(&brx, &xe).add(&t(&yx, &bre)))?;
    same("second form", lhs, t(&xy, &bre).add(&t(&brx, &ex)))
}

fn clw_super_bracket_of_simple_tensors(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let (p1, q1, p2, q2) = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, p1, q1);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let first = t(&cm(&sp, &x, &y)?, &wm(&sp, &xi, &eta)?).scale(&pm(q1 * p2));
    let second = t(&cm(&sp, &y, &x)?, &wm(&sp, &eta, &xi)?).scale(&pm(q1 * q2 + p1 * q2));
    same("bracket", super_bracket(&sp, &a, &b)?, first.sub(&second))
}

fn clw_super_bracket_with_even_left_factors(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let (p2, q2) = (c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, 0, 0);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let yx = cm(&sp, &y, &x)?;
    let rhs = t(&yx, &wl_bracket(&sp, &xi, &eta, Bracket::Lie)?).sub(&t(&cl_bracket(&sp, &y, &x, Bracket::Lie)?, &wm(&sp, &xi, &eta)?));
    same("bracket", super_bracket(&sp, &a, &b)?, rhs)
}

fn clw_super_bracket_with_odd_left_factors(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let (p2, q2) = (c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, 1, 1);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let yx = cm(&sp, &y, &x)?;
    let rhs = t(&yx, &wl_bracket(&sp, &xi, &eta, Bracket::Lie)?).sub(&t(&cl_bracket(&sp, &y, &x, Bracket::Super)?, &wm(&sp, &xi, &eta)?));
    same("bracket", super_bracket(&sp, &a, &b)?, rhs)
}

fn clw_inner_product_of_simple_tensors(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let (p1, q1, p2, q2) = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, p1, q1);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let rhs = &(&pm(q1 * p2) * &e_new(&sp, &x, &y)?) * &s_in(&sp, &xi, &eta)?;
    same("product form", x_in(&sp, &a, &b)?, rhs)?;
    // Supersymmetry with physical parities.
    same("supersymmetry", x_in(&sp, &a, &b)?, &pm(q1 * q2) * &x_in(&sp, &b, &a)?)
}

fn clw_product_moves_across_inner_product(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let p = c.upto(0, 1);
    let x = cp(c, &sp, 2, p);
    let (y, z) = (ca(c, &sp, 2), ca(c, &sp, 2));
    let lhs = x_in(&sp, &xm(&sp, &x, &y)?, &z)?;
    same("move", lhs.clone(), &pm(p) * &x_in(&sp, &y, &xm(&sp, &z, &x)?)?)?;
    same("associativity", lhs, x_in(&sp, &x, &xm(&sp, &y, &z)?)?)
}

fn clw_inner_product_of_simple_products(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let (p1, q1, p2, q2, p3, q3) = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, p1, q1);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let (z, phi, d) = simple(c, &sp, p3, q3);
    let lhs = x_in(&sp, &xm(&sp, &a, &b)?, &d)?;
    let factored = &(&pm(q1 * p2 + (q1 + q2) * p3) * &e_new(&sp, &cm(&sp, &x, &y)?, &z)?) * &s_in(&sp, &wm(&sp, &xi, &eta)?, &phi)?;
    same("factored", lhs.clone(), factored)?;
    same("associativity", lhs, x_in(&sp, &a, &xm(&sp, &b, &d)?)?)
}

fn clw_inner_product_is_super_invariant(c: &mut Ctx) -> Outcome {
    let sp = clw_space(c);
    let (x, y, z) = (ca(c, &sp, 2), ca(c, &sp, 2), ca(c, &sp, 2));
    let lhs = x_in(&sp, &super_bracket(&sp, &x, &y)?, &z)?;
    same("invariance", lhs, x_in(&sp, &x, &super_bracket(&sp, &y, &z)?)?)
}

// ---------------------------------------------------------------- star

fn star_ctx(sp: &SuperSpace) -> Result<StarContext<'_>, Failure> {
    Ok(StarContext::new(sp)?)
}

fn stars_are_involutions(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (x, xi, u) = (ea(c, &sp, 4), sa(c, &sp, 4), ca(c, &sp, 4));
    same("exterior", st.star_ext(&st.star_ext(&x)?)?, x)?;
    same("symmetric", st.star_sym(&st.star_sym(&xi)?)?, xi)?;
    same("clifford-weyl", st.star_clw(&st.star_clw(&u)?)?, u)
}

fn hermitian_form_is_sesquilinear(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (x, y) = (ca(c, &sp, 3), ca(c, &sp, 3));
    let a = random::scalar(&mut c.rng);
    let h = st.hermitian(&x, &y)?;
    same("first", st.hermitian(&x.scale(&a), &y)?, &a * &h)?;
    same("second", st.hermitian(&x, &y.scale(&a))?, &a.conj() * &h)
}

fn star_preserves_pairings(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (x, y) = (random::clw(&mut c.rng, sp.n0(), sp.n1(), 1, 3, None), random::clw(&mut c.rng, sp.n0(), sp.n1(), 1, 3, None));
    same("vectors", x_in(&sp, &st.star_clw(&x)?, &st.star_clw(&y)?)?, x_in(&sp, &x, &y)?.conj())?;
    let (a, b) = (ea(c, &sp, 3), ea(c, &sp, 3));
    same("exterior", e_in(&sp, &st.star_ext(&a)?, &st.star_ext(&b)?)?, e_in(&sp, &a, &b)?.conj())?;
    let (f, g) = (sa(c, &sp, 3), sa(c, &sp, 3));
    same("symmetric", s_in(&sp, &st.star_sym(&f)?, &st.star_sym(&g)?)?, s_in(&sp, &f, &g)?.conj())?;
    let (u, w) = (ca(c, &sp, 3), ca(c, &sp, 3));
    same("clifford-weyl", x_in(&sp, &st.star_clw(&u)?, &st.star_clw(&w)?)?, x_in(&sp, &u, &w)?.conj())
}

fn hermitian_form_on_vectors_under_star(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (p, q) = (c.upto(0, 1), c.upto(0, 1));
    let mut vec_of = |p: usize| {
        if p == 0 {
            ClwElem::from_ext(&random::ext(&mut c.rng, sp.n0(), &[1], 2), sp.n1())
        } else {
            ClwElem::from_sym(sp.n0(), &random::sym(&mut c.rng, sp.n1(), &[1], 2))
        }
    };
    let (x, y) = (vec_of(p), vec_of(q));
    same("conjugation", st.hermitian(&st.star_clw(&x)?, &st.star_clw(&y)?)?, &pm(p * q) * &st.hermitian(&x, &y)?.conj())
}

fn exterior_star_reverses_wedge(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (x, y) = (ea(c, &sp, 3), ea(c, &sp, 3));
    same("wedge", st.star_ext(&ew(&x, &y)?)?, ew(&st.star_ext(&y)?, &st.star_ext(&x)?)?)
}

fn clifford_star_negates_brackets(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (x, y) = (ea(c, &sp, 3), ea(c, &sp, 3));
    let (xs, ys) = (st.star_ext(&x)?, st.star_ext(&y)?);
    same("product", st.star_ext(&cm(&sp, &x, &y)?)?, cm(&sp, &ys, &xs)?)?;
    same("bracket", st.star_ext(&cl_bracket(&sp, &x, &y, Bracket::Lie)?)?, cl_bracket(&sp, &xs, &ys, Bracket::Lie)?.neg())
}

fn symmetric_star_of_vector_products(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let k = c.upto(0, 4);
    let vs: Vec<SymElem> = (0..k).map(|_| sv(c, &sp)).collect();
    let mut prod = SymElem::one(sp.n1());
    let mut starred = SymElem::one(sp.n1());
    for v in &vs {
        prod = sw(&prod, v)?;
        starred = sw(&starred, &st.star_sym(v)?)?;
    }
    same("product", st.star_sym(&prod)?, starred.scale(&pm(k * k.saturating_sub(1) / 2)))
}

fn symmetric_star_reverses_vee_with_sign(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (k, m) = (c.upto(0, 3), c.upto(0, 3));
    let (x, y) = (sh(c, &sp, k), sh(c, &sp, m));
    same("vee", st.star_sym(&sw(&x, &y)?)?, sw(&st.star_sym(&y)?, &st.star_sym(&x)?)?.scale(&pm(k * m)))
}

fn weyl_star_negates_super_brackets(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (x, y) = (sa(c, &sp, 3), sa(c, &sp, 3));
    let lhs = st.star_sym(&wl_bracket(&sp, &x, &y, Bracket::Super)?)?;
    same("bracket", lhs, wl_bracket(&sp, &st.star_sym(&x)?, &st.star_sym(&y)?, Bracket::Super)?.neg())
}

fn clw_star_of_simple_tensors(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (p, q) = (c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, p, q);
    same("tensor", st.star_clw(&a)?, t(&st.star_ext(&x)?, &st.star_sym(&xi)?).scale(&pm(p * q)))?;
    // Star-superalgebra law with physical parities.
    let (p2, q2) = (c.upto(0, 1), c.upto(0, 1));
    let (_, _, b) = simple(c, &sp, p2, q2);
    let lhs = st.star_clw(&xm(&sp, &a, &b)?)?;
    same("product", lhs, xm(&sp, &st.star_clw(&b)?, &st.star_clw(&a)?)?.scale(&pm(q * q2)))
}

fn clw_hermitian_form_under_star(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (p, q) = (c.upto(0, 1), c.upto(0, 1));
    let (x, y) = (cp(c, &sp, 3, p), cp(c, &sp, 3, q));
    same("conjugation", st.hermitian(&st.star_clw(&x)?, &st.star_clw(&y)?)?, &pm(p * q) * &st.hermitian(&x, &y)?.conj())
}

fn clw_hermitian_form_of_simple_tensors(c: &mut Ctx) -> Outcome {
    let sp = star_space(c);
    let st = star_ctx(&sp)?;
    let (p1, q1, p2, q2) = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
    let (x, xi, a) = simple(c, &sp, p1, q1);
    let (y, eta, b) = simple(c, &sp, p2, q2);
    let ext_part = e_new(&sp, &x, &st.star_ext(&y)?)?;
    let sym_part = st.hermitian_sym(&xi, &eta)?;
    same("factored", st.hermitian(&a, &b)?, &ext_part * &sym_part)
}

/// The identity catalogue.
pub fn identities() -> Vec<Law> {
    macro_rules! laws {
        ($($f:ident),* $(,)?) => { vec![$(Law { name: stringify!($f), check: $f }),*] };
    }
    laws![
        wedge_involutions_respect_products,
        vector_insertion_against_involutions,
        vector_insertion_is_adjoint_to_wedge,
        multi_insertion_composes_vector_insertions,
        multi_insertion_is_adjoint_to_wedge,
        equal_order_insertion_is_inner_product,
        symmetric_vector_insertion_adjoint,
        symmetric_multi_insertion_adjoint,
        equal_order_symmetric_insertion_is_pairing,
        clifford_product_involutions,
        vector_times_multivector,
        multivector_times_vector,
        clifford_vector_super_bracket_is_twice_insertion,
        graded_insertion_swaps_arguments,
        graded_insertion_by_wedge_with_vector,
        vector_insertion_after_graded_insertion,
        graded_insertion_into_wedge_with_vector,
        generalized_insertion_by_wedge_with_vector,
        vector_insertion_after_generalized_insertion,
        generalized_insertion_into_wedge_with_vector,
        generalized_insertion_symmetry_for_equal_parity,
        generalized_insertion_symmetry_for_mixed_parity,
        clifford_super_bracket_as_odd_graded_insertions,
        order_two_bracket_as_first_graded_insertion,
        order_two_bracket_is_wedge_derivation,
        graded_insertion_adjoint,
        generalized_insertion_adjoint,
        clifford_product_adjoints,
        clifford_bracket_adjoint,
        shifted_inner_product_is_cyclic,
        shifted_inner_product_is_bracket_invariant,
        weyl_vector_bracket_is_twice_insertion,
        weyl_vector_times_multivector,
        weyl_symmetrized_vector_product,
        symmetric_graded_insertion_by_vee_with_vector,
        symmetric_vector_insertion_after_graded_insertion,
        symmetric_graded_insertion_into_vee_with_vector,
        symmetric_generalized_insertion_sums,
        symmetric_vector_generalized_insertion_is_product,
        symmetric_generalized_insertion_by_vee_with_vector,
        symmetric_vector_insertion_after_generalized_insertion,
        symmetric_generalized_insertion_into_vee_with_vector,
        weyl_bracket_as_odd_graded_insertions,
        weyl_order_two_bracket_is_first_graded_insertion,
        symmetric_graded_insertion_adjoint,
        weyl_product_moves_across_inner_product,
        weyl_inner_product_is_associative,
        weyl_inner_product_is_super_invariant,
        clw_lie_bracket_of_simple_tensors_without_signs,
        clw_super_bracket_of_simple_tensors,
        clw_super_bracket_with_even_left_factors,
        clw_super_bracket_with_odd_left_factors,
        clw_inner_product_of_simple_tensors,
        clw_product_moves_across_inner_product,
        clw_inner_product_of_simple_products,
        clw_inner_product_is_super_invariant,
        stars_are_involutions,
        hermitian_form_is_sesquilinear,
        star_preserves_pairings,
        hermitian_form_on_vectors_under_star,
        exterior_star_reverses_wedge,
        clifford_star_negates_brackets,
        symmetric_star_of_vector_products,
        symmetric_star_reverses_vee_with_sign,
        weyl_star_negates_super_brackets,
        clw_star_of_simple_tensors,
        clw_hermitian_form_under_star,
        clw_hermitian_form_of_simple_tensors,
    ]
}

// ---------------------------------------------------------------- algebra laws

fn law_space(c: &mut Ctx, default: (usize, usize)) -> SuperSpace {
    let (n0, n1) = c.dims(default);
    let n0 = c.upto(0, n0);
    let m = c.upto(0, n1 / 2);
    random::space_of(&mut c.rng, n0, m)
}

fn clifford_product_is_associative(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (4, 0));
    let k = c.order(3);
    let (x, y, z) = (ea(c, &sp, k), ea(c, &sp, k), ea(c, &sp, k));
    same("associativity", cm(&sp, &cm(&sp, &x, &y)?, &z)?, cm(&sp, &x, &cm(&sp, &y, &z)?)?)
}

fn clifford_product_has_unit(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (5, 0));
    let x = ea(c, &sp, c.order(4));
    let one = ExtElem::one(sp.n0());
    same("left", cm(&sp, &one, &x)?, x.clone())?;
    same("right", cm(&sp, &x, &one)?, x)
}

fn weyl_product_is_associative(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (0, 4));
    let k = c.order(3);
    let (x, y, z) = (sa(c, &sp, k), sa(c, &sp, k), sa(c, &sp, k));
    same("associativity", wm(&sp, &wm(&sp, &x, &y)?, &z)?, wm(&sp, &x, &wm(&sp, &y, &z)?)?)
}

fn weyl_product_has_unit(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (0, 4));
    let x = sa(c, &sp, c.order(4));
    let one = SymElem::one(sp.n1());
    same("left", wm(&sp, &one, &x)?, x.clone())?;
    same("right", wm(&sp, &x, &one)?, x)
}

fn clw_product_is_associative(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (3, 4));
    let k = c.order(2);
    let (x, y, z) = (ca(c, &sp, k), ca(c, &sp, k), ca(c, &sp, k));
    same("associativity", xm(&sp, &xm(&sp, &x, &y)?, &z)?, xm(&sp, &x, &xm(&sp, &y, &z)?)?)
}

fn clw_product_has_unit(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (4, 4));
    let x = ca(c, &sp, c.order(3));
    let one = ClwElem::one(sp.n0(), sp.n1());
    same("left", xm(&sp, &one, &x)?, x.clone())?;
    same("right", xm(&sp, &x, &one)?, x)
}

fn clw_super_jacobi(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (3, 4));
    let k = c.order(2);
    let (a, b, d) = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
    let (x, y, z) = (cp(c, &sp, k, a), cp(c, &sp, k, b), cp(c, &sp, k, d));
    let sb = |u: &ClwElem, v: &ClwElem| super_bracket(&sp, u, v);
    let total = sb(&x, &sb(&y, &z)?)?
        .scale(&pm(a * d))
        .add(&sb(&y, &sb(&z, &x)?)?.scale(&pm(b * a)))
        .add(&sb(&z, &sb(&x, &y)?)?.scale(&pm(d * b)));
    same("cyclic sum", total, ClwElem::zero(sp.n0(), sp.n1()))
}

/// Associativity, unit and super-Jacobi laws.
pub fn algebra_laws() -> Vec<Law> {
    macro_rules! laws {
        ($($f:ident),* $(,)?) => { vec![$(Law { name: stringify!($f), check: $f }),*] };
    }
    laws![
        clifford_product_is_associative,
        clifford_product_has_unit,
        weyl_product_is_associative,
        weyl_product_has_unit,
        clw_product_is_associative,
        clw_product_has_unit,
        clw_super_jacobi,
    ]
}

// ---------------------------------------------------------------- differential

fn clw_product_agrees_with_oracle(c: &mut Ctx) -> Outcome {
    let sp = law_space(c, (4, 4));
    let k = c.order(3);
    let (x, y) = (ca(c, &sp, k), ca(c, &sp, k));
    same("product", xm(&sp, &x, &y)?, Oracle::new(&sp).mul(&x, &y)?)
}

fn clifford_product_agrees_with_oracle(c: &mut Ctx) -> Outcome {
    let (n0, _) = c.dims((5, 0));
    let n0 = c.upto(1, n0);
    let sp = random::space_of(&mut c.rng, n0, 0);
    let k = c.order(4);
    let (x, y) = (ea(c, &sp, k), ea(c, &sp, k));
    same("product", cm(&sp, &x, &y)?, Oracle::new(&sp).mul_ext(&x, &y)?)
}

fn weyl_product_agrees_with_oracle(c: &mut Ctx) -> Outcome {
    let (_, n1) = c.dims((0, 4));
    let m = c.upto(1, n1 / 2);
    let sp = random::space_of(&mut c.rng, 0, m);
    let k = c.order(4);
    let (x, y) = (sa(c, &sp, k), sa(c, &sp, k));
    same("product", wm(&sp, &x, &y)?, Oracle::new(&sp).mul_sym(&x, &y)?)
}

/// Insertion-formula products against the rewrite oracle.
pub fn differential() -> Vec<Law> {
    vec![
        Law { name: "clw_product_agrees_with_oracle", check: clw_product_agrees_with_oracle },
        Law { name: "clifford_product_agrees_with_oracle", check: clifford_product_agrees_with_oracle },
        Law { name: "weyl_product_agrees_with_oracle", check: weyl_product_agrees_with_oracle },
    ]
}

// ---------------------------------------------------------------- embeddings

fn column(t: &[Vec<Scalar>], j: usize) -> Vec<Scalar> {
    t.iter().map(|row| row[j].clone()).collect()
}

fn orthogonal_embedding_round_trip(c: &mut Ctx) -> Outcome {
    let (n0, _) = c.dims((4, 0));
    let n0 = c.upto(1, n0);
    let sp = random::space_of(&mut c.rng, n0, 0);
    let t = random::o_member(&mut c.rng, &sp);
    let y = clifford::o_embed(&sp, &t)?;
    same("round trip", clifford::o_project(&sp, &y)?, t.clone())?;
    for j in 0..n0 {
        let v = ExtElem::basis(n0, j);
        let image = cl_bracket(&sp, &y, &v, Bracket::Lie)?;
        let coords: Vec<Scalar> = (0..n0).map(|i| image.coeff(Blade(1 << i))).collect();
        same(&format!("T(e{j})"), coords, column(&t, j))?;
        same(&format!("insertion form on e{j}"), image, ei(&sp, &v, &y)?.scale(&Scalar::from(-2)))?;
    }
    Ok(())
}

fn symplectic_embedding_round_trip(c: &mut Ctx) -> Outcome {
    let (_, n1) = c.dims((0, 4));
    let m = c.upto(1, n1 / 2);
    let sp = random::space_of(&mut c.rng, 0, m);
    let n = sp.n1();
    let t = random::sp_member(&mut c.rng, &sp);
    let xi = crate::weyl::sp_embed(&sp, &t)?;
    same("round trip", crate::weyl::sp_project(&sp, &xi)?, t.clone())?;
    for j in 0..n {
        let eta = SymElem::basis(n, j);
        let image = wl_bracket(&sp, &xi, &eta, Bracket::Lie)?;
        let coords: Vec<Scalar> = (0..n).map(|i| image.coeff(&crate::symmetric::Mono::from_word(n, &[i]))).collect();
        same(&format!("T(x{j})"), coords, column(&t, j))?;
        same(&format!("graded form on x{j}"), image.clone(), sg(&sp, &xi, 1, &eta)?.scale(&two()))?;
        same(&format!("insertion form on x{j}"), image, si(&sp, &eta, &xi)?.scale(&Scalar::from(-2)))?;
    }
    Ok(())
}

fn orthosymplectic_embedding_round_trip(c: &mut Ctx) -> Outcome {
    let (n0, n1) = c.dims((3, 4));
    let (n0, m) = (c.upto(0, n0), c.upto(0, n1 / 2));
    let sp = random::space_of(&mut c.rng, n0, m);
    let d = sp.n0() + sp.n1();
    let t = random::osp_member(&mut c.rng, &sp);
    let x = clw::osp_embed(&sp, &t)?;
    same("round trip", clw::osp_project(&sp, &x)?, t.clone())?;
    for j in 0..d {
        let image = super_bracket(&sp, &x, &ClwElem::vector(sp.n0(), sp.n1(), j))?;
        let coords: Vec<Scalar> = (0..d).map(|i| image.coeff(&ClwElem::vector(sp.n0(), sp.n1(), i).terms().next().expect("basis").0.clone())).collect();
        same(&format!("T(v{j})"), coords, column(&t, j))?;
    }
    Ok(())
}

/// Embedding round trips with the bracket action on every basis vector.
pub fn embeddings() -> Vec<Law> {
    vec![
        Law { name: "orthogonal_embedding_round_trip", check: orthogonal_embedding_round_trip },
        Law { name: "symplectic_embedding_round_trip", check: symplectic_embedding_round_trip },
        Law { name: "orthosymplectic_embedding_round_trip", check: orthosymplectic_embedding_round_trip },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds_always(cases: usize, seed: u64, mut f: impl FnMut(&mut Ctx) -> bool) -> bool {
        let mut c = Ctx::new(seed);
        (0..cases).all(|_| f(&mut c))
    }

    #[test]
    fn equal_order_symmetric_insertion_constant() {
        // Adopted: i_η ξ = ⟨η, ξ⟩ = (−1)^k ⟨ξ, η⟩. The product of both
        // pairings is not even linear in ξ.
        let lhs_rhs = |c: &mut Ctx| {
            let sp = sym_space(c);
            let k = c.upto(0, 3);
            let (xi, eta) = (sh(c, &sp, k), sh(c, &sp, k));
            let lhs = symmetric::insert_multi(&sp, &eta, &xi).unwrap();
            let a = s_in(&sp, &xi, &eta).unwrap();
            let b = s_in(&sp, &eta, &xi).unwrap();
            (sp.n1(), k, lhs, a, b)
        };
        assert!(holds_always(100, 1, |c| {
            let (n1, k, lhs, a, b) = lhs_rhs(c);
            lhs == SymElem::scalar(n1, b) && lhs == SymElem::scalar(n1, &pm(k) * &a)
        }));
        assert!(!holds_always(100, 2, |c| {
            let (n1, k, lhs, a, b) = lhs_rhs(c);
            lhs == SymElem::scalar(n1, &(&pm(k) * &a) * &b)
        }));
    }

    #[test]
    fn unsigned_lie_decomposition_fails_when_tensor_signs_appear() {
        // With an odd exterior factor on one side and an odd symmetric
        // factor on the other, neither sign-free form survives.
        assert!(!holds_always(20, 3, |c| {
            let sp = clw_space(c);
            let (x, xi, a) = simple(c, &sp, 0, 1);
            let (y, eta, b) = simple(c, &sp, 1, 0);
            let lhs = lie_bracket(&sp, &a, &b).unwrap();
            let xy = cm(&sp, &x, &y).unwrap();
            let yx = cm(&sp, &y, &x).unwrap();
            let xe = wm(&sp, &xi, &eta).unwrap();
            let bre = xe.sub(&wm(&sp, &eta, &xi).unwrap());
            lhs == t(&xy.sub(&yx), &xe).add(&t(&yx, &bre))
        }));
    }

    #[test]
    fn alternating_summed_adjoint_needs_sign_and_opp() {
        let sample = |c: &mut Ctx| {
            let sp = ext_space(c);
            let k = c.upto(1, 3);
            let (x, y, z) = (eh(c, &sp, k), ea(c, &sp, 4), ea(c, &sp, 4));
            let lhs = e_in(&sp, &efa(&sp, &x, &y).unwrap(), &z).unwrap();
            let printed = e_in(&sp, &y, &efa(&sp, &x, &z).unwrap()).unwrap();
            (lhs, printed)
        };
        assert!(!holds_always(100, 4, |c| {
            let (lhs, printed) = sample(c);
            lhs == printed
        }));
    }

    #[test]
    fn hermitian_form_of_simple_tensors_uses_shifted_pairing() {
        // The plain exterior Hermitian factor differs in sign on orders 2
        // and 3; the shifted pairing ⟨x^opp, y*⟩ is the one that factors.
        assert!(!holds_always(200, 5, |c| {
            let sp = star_space(c);
            let st = star_ctx(&sp).unwrap();
            let (p1, q1, p2, q2) = (c.upto(0, 1), c.upto(0, 1), c.upto(0, 1), c.upto(0, 1));
            let (x, xi, a) = simple(c, &sp, p1, q1);
            let (y, eta, b) = simple(c, &sp, p2, q2);
            st.hermitian(&a, &b).unwrap() == &st.hermitian_ext(&x, &y).unwrap() * &st.hermitian_sym(&xi, &eta).unwrap()
        }));
    }

    #[test]
    fn exterior_involution_rules_rejected_variants() {
        // Only (i_v x)^opp = −i_v x̄ and (i_v x)‾ = i_v x^opp hold.
        assert!(!holds_always(100, 6, |c| {
            let sp = ext_space(c);
            let (v, x) = (ev(c, &sp), ea(c, &sp, 4));
            ei(&sp, &v, &x).unwrap().opp() == ei(&sp, &v, &x.opp()).unwrap().neg()
        }));
    }

    #[test]
    fn catalogue_names_are_unique() {
        let mut names: Vec<_> = identities().iter().map(|l| l.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), identities().len());
    }

    #[test]
    fn run_reports_the_failing_law() {
        let law = Law { name: "always_fails", check: |_| Err(Failure("no".into())) };
        let err = run(&law, 3, 0, None, None).unwrap_err();
        assert!(err.contains("always_fails") && err.contains("case 0"));
    }
}
