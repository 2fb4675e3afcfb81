//! Evaluation of parsed expressions in `CLW(V)`.

use std::fmt;

use clw_core::clw::{self, ClwElem};
use clw_core::exterior::wedge;
use clw_core::parity::Bracket;
use clw_core::star::StarContext;
use clw_core::symmetric::vee;
use clw_core::{Error, Result, Scalar, SuperSpace};

use crate::expr::Expr;

/// A scalar, from an inner product or a scalar-only expression, or an
/// algebra element.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Elem(ClwElem),
}

impl Value {
    pub fn into_elem(self, space: &SuperSpace) -> ClwElem {
        match self {
            Value::Scalar(c) => ClwElem::scalar(space.n0(), space.n1(), c),
            Value::Elem(x) => x,
        }
    }

    pub fn to_text(&self, space: &SuperSpace) -> String {
        match self {
            Value::Scalar(c) => c.to_string(),
            Value::Elem(x) => x.to_text(space),
        }
    }

    /// Whether two values denote the same element.
    pub fn same_as(&self, other: &Value, space: &SuperSpace) -> bool {
        self.clone().into_elem(space) == other.clone().into_elem(space)
    }
}

/// Values printed without reference to basis labels, for diagnostics.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Elem(x) => write!(f, "{x:?}"),
        }
    }
}

fn kind(what: &'static str) -> Error {
    Error::NotInAlgebra(what)
}

pub struct Evaluator<'a> {
    space: &'a SuperSpace,
}

impl<'a> Evaluator<'a> {
    pub fn new(space: &'a SuperSpace) -> Self {
        Evaluator { space }
    }

    fn elem(&self, e: &Expr) -> Result<ClwElem> {
        Ok(self.eval(e)?.into_elem(self.space))
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        let sp = self.space;
        let (n0, n1) = (sp.n0(), sp.n1());
        Ok(match e {
            Expr::Num(c) => Value::Scalar(c.clone()),
            Expr::Even(i) => Value::Elem(ClwElem::vector(n0, n1, *i)),
            Expr::Odd(j) => Value::Elem(ClwElem::vector(n0, n1, n0 + j)),
            Expr::Neg(a) => match self.eval(a)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Elem(x) => Value::Elem(x.neg()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let negate = matches!(e, Expr::Sub(..));
                match (self.eval(a)?, self.eval(b)?) {
                    (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if negate { &x - &y } else { &x + &y }),
                    (x, y) => {
                        let (x, y) = (x.into_elem(sp), y.into_elem(sp));
                        Value::Elem(if negate { x.sub(&y) } else { x.add(&y) })
                    }
                }
            }
            Expr::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
                (Value::Scalar(c), Value::Elem(x)) | (Value::Elem(x), Value::Scalar(c)) => Value::Elem(x.scale(&c)),
                (Value::Elem(x), Value::Elem(y)) => Value::Elem(clw::clw_mul(sp, &x, &y)?),
            },
            Expr::Div(a, b) => {
                let d = match self.eval(b)? {
                    Value::Scalar(d) => d.inv()?,
                    Value::Elem(y) => y.as_scalar().ok_or(kind("scalars (division)"))?.inv()?,
                };
                match self.eval(a)? {
                    Value::Scalar(c) => Value::Scalar(&c * &d),
                    Value::Elem(x) => Value::Elem(x.scale(&d)),
                }
            }
            Expr::Wedge(a, b) => {
                let x = self.elem(a)?.as_ext().ok_or(kind("the exterior algebra (wedge)"))?;
                let y = self.elem(b)?.as_ext().ok_or(kind("the exterior algebra (wedge)"))?;
                Value::Elem(ClwElem::from_ext(&wedge(&x, &y)?, n1))
            }
            Expr::Vee(a, b) => {
                let x = self.elem(a)?.as_sym().ok_or(kind("the symmetric algebra (vee)"))?;
                let y = self.elem(b)?.as_sym().ok_or(kind("the symmetric algebra (vee)"))?;
                Value::Elem(ClwElem::from_sym(n0, &vee(&x, &y)?))
            }
            Expr::Tensor(a, b) => {
                let x = self.elem(a)?.as_ext().ok_or(kind("the exterior algebra (left tensor factor)"))?;
                let y = self.elem(b)?.as_sym().ok_or(kind("the symmetric algebra (right tensor factor)"))?;
                Value::Elem(ClwElem::tensor(&x, &y))
            }
            Expr::Bracket(a, b, kind) => {
                let (x, y) = (self.elem(a)?, self.elem(b)?);
                Value::Elem(match kind {
                    Bracket::Lie => clw::lie_bracket(sp, &x, &y)?,
                    Bracket::Super => clw::super_bracket(sp, &x, &y)?,
                })
            }
            Expr::Inner(a, b) => Value::Scalar(clw::inner(sp, &self.elem(a)?, &self.elem(b)?)?),
            Expr::Star(a) => match self.eval(a)? {
                Value::Scalar(c) => Value::Scalar(c.conj()),
                Value::Elem(x) => Value::Elem(StarContext::new(sp)?.star_clw(&x)?),
            },
            Expr::Order(a, k) => Value::Elem(clw::order_project(&self.elem(a)?, *k)),
        })
    }
}

/// Parse and evaluate in one step.
pub fn eval_str(text: &str, space: &SuperSpace) -> Result<Value> {
    Evaluator::new(space).eval(&crate::expr::parse(text, space)?)
}
