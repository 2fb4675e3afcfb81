//! Shared term printer for the text forms of algebra elements.

use crate::scalar::Scalar;

/// Render `Σ coeff·basis` where an empty basis string denotes the unit.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut out = String::new();
    for (coeff, basis) in terms {
        let (negative, mag) = split_sign(coeff);
        let body = match (basis.is_empty(), mag.is_one()) {
            (true, _) => wrap(&mag),
            (false, true) => basis,
            (false, false) => format!("{}*{}", wrap(&mag), basis),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A coefficient with a single negative component is printed with a minus
/// sign in front of its magnitude.
fn split_sign(c: &Scalar) -> (bool, Scalar) {
    if c.component_count() == 1 {
        let negative = c.to_string().starts_with('-');
        if negative {
            return (true, -c);
        }
    }
    (false, c.clone())
}

fn wrap(c: &Scalar) -> String {
    if c.component_count() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}
