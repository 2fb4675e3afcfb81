//! Superspace descriptors: the symmetric form on the even part, the
//! alternating form on the odd part, basis labels and an optional star pairing.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Star structure on basis vectors: `b_i* = coeff_i · b_{target_i}`, extended
/// conjugate-linearly. Even and odd parts are paired separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPairing {
    pub even: Vec<(usize, Scalar)>,
    pub odd: Vec<(usize, Scalar)>,
}

impl StarPairing {
    /// Every basis vector selfadjoint.
    pub fn identity(n0: usize, n1: usize) -> Self {
        StarPairing {
            even: (0..n0).map(|i| (i, Scalar::one())).collect(),
            odd: (0..n1).map(|i| (i, Scalar::one())).collect(),
        }
    }
}

/// Layout of a space built by [`SuperSpace::witt`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WittLayout {
    pub n: usize,
    pub odd_extra: bool,
    pub m: usize,
}

impl WittLayout {
    pub fn e(&self, i: usize) -> usize {
        i
    }
    pub fn e_star(&self, i: usize) -> usize {
        self.n + i
    }
    /// The extra selfadjoint vector of an odd-dimensional even part.
    pub fn e_extra(&self) -> Option<usize> {
        self.odd_extra.then_some(2 * self.n)
    }
    pub fn xi_lower(&self, j: usize) -> usize {
        j
    }
    pub fn xi_upper(&self, j: usize) -> usize {
        self.m + j
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperSpace {
    n0: usize,
    n1: usize,
    labels0: Vec<String>,
    labels1: Vec<String>,
    gram: Matrix,
    omega: Matrix,
    star: Option<StarPairing>,
    even_nondegenerate: bool,
    odd_nondegenerate: bool,
    witt: Option<WittLayout>,
}

impl SuperSpace {
    /// Validate and build a space. `require_nondegenerate` turns a degenerate
    /// form (or an odd-dimensional odd part) into an error.
    pub fn new(n0: usize, n1: usize, gram: Matrix, omega: Matrix, require_nondegenerate: bool) -> Result<Self> {
        if !linalg::is_square(&gram, n0) {
            return Err(Error::Shape(format!("G must be {n0}x{n0}")));
        }
        if !linalg::is_square(&omega, n1) {
            return Err(Error::Shape(format!("W must be {n1}x{n1}")));
        }
        for i in 0..n0 {
            for j in i + 1..n0 {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        for i in 0..n1 {
            if !omega[i][i].is_zero() {
                return Err(Error::NotAlternating(i, i));
            }
            for j in i + 1..n1 {
                if omega[i][j] != -&omega[j][i] {
                    return Err(Error::NotAlternating(i, j));
                }
            }
        }
        if require_nondegenerate && n1 % 2 == 1 {
            return Err(Error::OddSymplecticDimension(n1));
        }
        let even_nondegenerate = !linalg::det(&gram).is_zero();
        let odd_nondegenerate = !linalg::det(&omega).is_zero();
        if require_nondegenerate && !even_nondegenerate {
            return Err(Error::Degenerate("symmetric form on the even part"));
        }
        if require_nondegenerate && !odd_nondegenerate {
            return Err(Error::Degenerate("alternating form on the odd part"));
        }
        Ok(SuperSpace {
            n0,
            n1,
            labels0: (1..=n0).map(|i| format!("e{i}")).collect(),
            labels1: (1..=n1).map(|i| format!("x{i}")).collect(),
            gram,
            omega,
            star: None,
            even_nondegenerate,
            odd_nondegenerate,
            witt: None,
        })
    }

    /// Even part with identity Gram matrix and selfadjoint basis; odd part with
    /// `m` standard symplectic planes.
    pub fn euclidean(n0: usize, m: usize) -> Self {
        let mut omega = linalg::zeros(2 * m, 2 * m);
        for j in 0..m {
            omega[j][m + j] = Scalar::one();
            omega[m + j][j] = -Scalar::one();
        }
        let labels1 = (1..=m).map(|j| format!("x{j}")).chain((1..=m).map(|j| format!("x{j}^"))).collect();
        let mut star = StarPairing::identity(n0, 0);
        star.odd = symplectic_star(m);
        SuperSpace::new(n0, 2 * m, linalg::identity(n0), omega, true)
            .expect("standard forms are valid")
            .with_labels(None, Some(labels1))
            .expect("label count matches")
            .with_star(star)
            .expect("standard pairing is compatible")
    }

    /// Witt basis `e_1..e_n, e_1*..e_n*` (plus a selfadjoint `e` when
    /// `odd_extra`) for the even part, symplectic basis `ξ_1..ξ_m, ξ^1..ξ^m`
    /// for the odd part.
    pub fn witt(n: usize, odd_extra: bool, m: usize) -> Self {
        let d0 = 2 * n + usize::from(odd_extra);
        let mut gram = linalg::zeros(d0, d0);
        for i in 0..n {
            gram[i][n + i] = Scalar::one();
            gram[n + i][i] = Scalar::one();
        }
        if odd_extra {
            gram[2 * n][2 * n] = Scalar::one();
        }
        let mut omega = linalg::zeros(2 * m, 2 * m);
        for j in 0..m {
            omega[j][m + j] = Scalar::one();
            omega[m + j][j] = -Scalar::one();
        }
        let mut labels0: Vec<String> = (1..=n).map(|i| format!("e{i}")).chain((1..=n).map(|i| format!("e{i}*"))).collect();
        if odd_extra {
            labels0.push("e0".to_string());
        }
        let labels1 = (1..=m).map(|j| format!("x{j}")).chain((1..=m).map(|j| format!("x{j}^"))).collect();
        let mut even: Vec<(usize, Scalar)> = (0..n).map(|i| (n + i, Scalar::one())).chain((0..n).map(|i| (i, Scalar::one()))).collect();
        if odd_extra {
            even.push((2 * n, Scalar::one()));
        }
        let star = StarPairing { even, odd: symplectic_star(m) };
        let mut space = SuperSpace::new(d0, 2 * m, gram, omega, true)
            .expect("Witt forms are valid")
            .with_labels(Some(labels0), Some(labels1))
            .expect("label count matches")
            .with_star(star)
            .expect("Witt pairing is compatible");
        space.witt = Some(WittLayout { n, odd_extra, m });
        space
    }

    pub fn with_labels(mut self, even: Option<Vec<String>>, odd: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = even {
            if l.len() != self.n0 {
                return Err(Error::Shape(format!("expected {} even labels", self.n0)));
            }
            self.labels0 = l;
        }
        if let Some(l) = odd {
            if l.len() != self.n1 {
                return Err(Error::Shape(format!("expected {} odd labels", self.n1)));
            }
            self.labels1 = l;
        }
        Ok(self)
    }

    /// Attach a star pairing after checking it is an involution compatible
    /// with both forms: `⟨x*, y*⟩ = conj⟨x, y⟩` on basis vectors.
    pub fn with_star(mut self, star: StarPairing) -> Result<Self> {
        check_pairing(&star.even, &self.gram, "even")?;
        check_pairing(&star.odd, &self.omega, "odd")?;
        self.star = Some(star);
        Ok(self)
    }

    pub fn n0(&self) -> usize {
        self.n0
    }
    pub fn n1(&self) -> usize {
        self.n1
    }
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }
    pub fn omega(&self) -> &Matrix {
        &self.omega
    }
    pub fn g(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[i][j]
    }
    pub fn w(&self, i: usize, j: usize) -> &Scalar {
        &self.omega[i][j]
    }
    pub fn star(&self) -> Option<&StarPairing> {
        self.star.as_ref()
    }
    pub fn witt_layout(&self) -> Option<WittLayout> {
        self.witt
    }
    pub fn even_labels(&self) -> &[String] {
        &self.labels0
    }
    pub fn odd_labels(&self) -> &[String] {
        &self.labels1
    }
    pub fn is_nondegenerate(&self) -> bool {
        self.even_nondegenerate && self.odd_nondegenerate
    }
    pub fn even_nondegenerate(&self) -> bool {
        self.even_nondegenerate
    }
    pub fn odd_nondegenerate(&self) -> bool {
        self.odd_nondegenerate
    }

    /// The supersymmetric form on `V = V₀ ⊕ V₁` as one block matrix.
    pub fn super_form(&self) -> Matrix {
        let d = self.n0 + self.n1;
        let mut m = linalg::zeros(d, d);
        for i in 0..self.n0 {
            for j in 0..self.n0 {
                m[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..self.n1 {
            for j in 0..self.n1 {
                m[self.n0 + i][self.n0 + j] = self.omega[i][j].clone();
            }
        }
        m
    }

    pub fn check_dims(&self, n0: usize, n1: usize) -> Result<()> {
        if n0 != self.n0 || n1 != self.n1 {
            return Err(Error::SpaceMismatch(format!(
                "element lives in ({n0}|{n1}), space is ({}|{})",
                self.n0, self.n1
            )));
        }
        Ok(())
    }

    /// Parse the plain-text descriptor format (see [`SuperSpace::to_descriptor`]).
    pub fn parse_descriptor(text: &str) -> Result<Self> {
        parse_descriptor(text)
    }

    /// Render the descriptor: a `space n0 n1` header, `labels` lines, `G` and
    /// `W` rows with comma-separated scalars, and an optional `star` section.
    pub fn to_descriptor(&self) -> String {
        let mut out = format!("space {} {}\n", self.n0, self.n1);
        out.push_str(&format!("labels0 {}\n", self.labels0.join(" ")));
        out.push_str(&format!("labels1 {}\n", self.labels1.join(" ")));
        out.push_str("G\n");
        for row in &self.gram {
            out.push_str(&row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
            out.push('\n');
        }
        out.push_str("W\n");
        for row in &self.omega {
            out.push_str(&row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
            out.push('\n');
        }
        if let Some(star) = &self.star {
            out.push_str("star\n");
            for (t, c) in star.even.iter().chain(&star.odd) {
                out.push_str(&format!("{}, {}\n", t + 1, c));
            }
        }
        out
    }
}

/// `ξ_j* = −i·ξ^j`, `(ξ^j)* = −i·ξ_j`: the compatible pairing on a
/// symplectic basis obtained from a real symplectic plane.
fn symplectic_star(m: usize) -> Vec<(usize, Scalar)> {
    let minus_i = -Scalar::i();
    (0..m).map(|j| (m + j, minus_i.clone())).chain((0..m).map(|j| (j, minus_i.clone()))).collect()
}

fn check_pairing(pairs: &[(usize, Scalar)], form: &Matrix, part: &str) -> Result<()> {
    let n = form.len();
    if pairs.len() != n {
        return Err(Error::BadStarPairing(format!("{part} part needs {n} entries")));
    }
    for (i, (t, c)) in pairs.iter().enumerate() {
        if *t >= n {
            return Err(Error::BadStarPairing(format!("{part} target {} out of range", t + 1)));
        }
        let (back, c2) = &pairs[*t];
        if *back != i || (c.conj() * c2) != Scalar::one() {
            return Err(Error::BadStarPairing(format!("{part} pairing is not an involution at {}", i + 1)));
        }
    }
    for (i, (ti, ci)) in pairs.iter().enumerate() {
        for (j, (tj, cj)) in pairs.iter().enumerate() {
            let lhs = ci * cj * &form[*ti][*tj];
            if lhs != form[i][j].conj() {
                return Err(Error::BadStarPairing(format!(
                    "{part} pairing is not compatible with the form at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Change of basis from an orthonormal selfadjoint basis `v_1..v_{2n}` to the
/// Witt basis `e_k = (v_{2k−1} + i·v_{2k})/√2`, `e_k* = (v_{2k−1} − i·v_{2k})/√2`.
///
/// Row `r` of the returned matrix holds the coordinates of the `r`-th Witt
/// vector in the old basis.
pub fn orthonormal_to_witt(space: &SuperSpace) -> Result<(SuperSpace, Matrix)> {
    let d = space.n0();
    if d % 2 == 1 {
        return Err(Error::OddDimension);
    }
    if space.gram() != &linalg::identity(d) {
        return Err(Error::Shape("even part must have identity Gram matrix".into()));
    }
    if let Some(star) = space.star() {
        if star.even.iter().enumerate().any(|(i, (t, c))| *t != i || !c.is_one()) {
            return Err(Error::Shape("even basis must be selfadjoint".into()));
        }
    }
    let n = d / 2;
    let half_r2 = Scalar::sqrt2() * Scalar::rational(1, 2);
    let i_half_r2 = &half_r2 * &Scalar::i();
    let mut change = linalg::zeros(d, d);
    for k in 0..n {
        change[k][2 * k] = half_r2.clone();
        change[k][2 * k + 1] = i_half_r2.clone();
        change[n + k][2 * k] = half_r2.clone();
        change[n + k][2 * k + 1] = -&i_half_r2;
    }
    let mut witt = SuperSpace::witt(n, false, 0);
    if space.n1() > 0 {
        witt = SuperSpace::new(d, space.n1(), witt.gram.clone(), space.omega.clone(), false)?
            .with_labels(Some(witt.labels0.clone()), Some(space.labels1.clone()))?;
        if let Some(star) = space.star() {
            let even = SuperSpace::witt(n, false, 0).star.expect("witt star").even;
            witt = witt.with_star(StarPairing { even, odd: star.odd.clone() })?;
        }
    }
    Ok((witt, change))
}

/// Integer coordinates of a weight in the dual basis `H^1..H^n, K^1..K^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub h: Vec<i64>,
    pub k: Vec<i64>,
}

impl WeightVector {
    pub fn zero(n: usize, m: usize) -> Self {
        WeightVector { h: vec![0; n], k: vec![0; m] }
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().chain(&self.k).all(|&c| c == 0)
    }

    pub fn scaled(&self, s: i64) -> Self {
        WeightVector { h: self.h.iter().map(|c| c * s).collect(), k: self.k.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, other: &WeightVector) -> Self {
        WeightVector {
            h: self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect(),
            k: self.k.iter().zip(&other.k).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn coords(&self) -> impl Iterator<Item = i64> + '_ {
        self.h.iter().chain(&self.k).copied()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let named = self
            .h
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, format!("H{}", i + 1)))
            .chain(self.k.iter().enumerate().map(|(j, c)| (*c, format!("K{}", j + 1))));
        for (c, name) in named {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn split_row(line: &str) -> Vec<&str> {
    if line.contains(',') {
        line.split(',').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    }
}

fn parse_descriptor(text: &str) -> Result<SuperSpace> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Gram,
        Omega,
        Star,
    }
    let mut header: Option<(usize, usize)> = None;
    let mut labels0 = None;
    let mut labels1 = None;
    let mut gram: Matrix = Vec::new();
    let mut omega: Matrix = Vec::new();
    let mut star_rows: Vec<(usize, Scalar)> = Vec::new();
    let mut saw_star = false;
    let mut require = false;
    let mut section = Section::None;

    // Error columns are 1-based character offsets into the whole text.
    let mut offset = 0usize;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let col = line_start + 1;
        let mut words = line.split_whitespace();
        let first = words.next().unwrap_or("");
        match first {
            "space" => {
                let n0 = words.next().and_then(|w| w.parse().ok());
                let n1 = words.next().and_then(|w| w.parse().ok());
                match (n0, n1, words.next()) {
                    (Some(a), Some(b), None) if a <= 64 && b <= 64 => header = Some((a, b)),
                    _ => return Err(Error::parse(col, "expected 'space <n0> <n1>' with dimensions at most 64")),
                }
                section = Section::None;
            }
            "labels0" => labels0 = Some(words.map(str::to_string).collect::<Vec<_>>()),
            "labels1" => labels1 = Some(words.map(str::to_string).collect::<Vec<_>>()),
            "require" if words.next() == Some("nondegenerate") => require = true,
            "G" if line == "G" => section = Section::Gram,
            "W" if line == "W" => section = Section::Omega,
            "star" if line == "star" => {
                section = Section::Star;
                saw_star = true;
            }
            _ => {
                if header.is_none() {
                    return Err(Error::parse(col, "descriptor must start with a 'space' header"));
                }
                let cells = split_row(line);
                match section {
                    Section::Gram | Section::Omega => {
                        let row = cells
                            .iter()
                            .map(|c| Scalar::parse(c).map_err(|_| Error::parse(col, format!("bad scalar '{c}'"))))
                            .collect::<Result<Vec<_>>>()?;
                        if section == Section::Gram {
                            gram.push(row);
                        } else {
                            omega.push(row);
                        }
                    }
                    Section::Star => {
                        if cells.len() != 2 {
                            return Err(Error::parse(col, "star rows are '<target>, <coefficient>'"));
                        }
                        let target: usize = cells[0]
                            .parse()
                            .ok()
                            .filter(|&t| t >= 1)
                            .ok_or_else(|| Error::parse(col, "star target must be a 1-based index"))?;
                        let coeff = Scalar::parse(cells[1]).map_err(|_| Error::parse(col, "bad star coefficient"))?;
                        star_rows.push((target - 1, coeff));
                    }
                    Section::None => return Err(Error::parse(col, format!("unexpected line '{line}'"))),
                }
            }
        }
    }
    let (n0, n1) = header.ok_or_else(|| Error::parse(1, "missing 'space' header"))?;
    let mut space = SuperSpace::new(n0, n1, gram, omega, require)?.with_labels(labels0, labels1)?;
    if saw_star {
        if star_rows.len() != n0 + n1 {
            return Err(Error::BadStarPairing(format!("expected {} star rows", n0 + n1)));
        }
        let odd = star_rows.split_off(n0);
        space = space.with_star(StarPairing { even: star_rows, odd })?;
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn euclidean_plane_is_nondegenerate() {
        let sp = SuperSpace::new(2, 0, linalg::identity(2), vec![], true).unwrap();
        assert!(sp.is_nondegenerate());
    }

    #[test]
    fn symplectic_plane() {
        let w = vec![vec![s(0), s(1)], vec![s(-1), s(0)]];
        let sp = SuperSpace::new(0, 2, vec![], w, true).unwrap();
        assert!(sp.odd_nondegenerate());
    }

    #[test]
    fn odd_symplectic_dimension_rejected() {
        let w = linalg::zeros(3, 3);
        assert_eq!(SuperSpace::new(0, 3, vec![], w.clone(), true), Err(Error::OddSymplecticDimension(3)));
        assert!(SuperSpace::new(0, 3, vec![], w, false).is_ok());
    }

    #[test]
    fn asymmetric_and_non_alternating_rejected() {
        let g = vec![vec![s(1), s(2)], vec![s(3), s(1)]];
        assert_eq!(SuperSpace::new(2, 0, g, vec![], false), Err(Error::NotSymmetric(0, 1)));
        let w = vec![vec![s(1), s(0)], vec![s(0), s(0)]];
        assert_eq!(SuperSpace::new(0, 2, vec![], w, false), Err(Error::NotAlternating(0, 0)));
    }

    #[test]
    fn witt_gram_matrices() {
        let sp = SuperSpace::witt(1, false, 0);
        assert_eq!(sp.gram(), &vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        let sp = SuperSpace::witt(0, false, 1);
        assert_eq!(sp.omega(), &vec![vec![s(0), s(1)], vec![s(-1), s(0)]]);
        let sp = SuperSpace::witt(1, true, 0);
        assert_eq!(sp.n0(), 3);
        assert_eq!(sp.gram()[2], vec![s(0), s(0), s(1)]);
        assert_eq!(sp.even_labels(), &["e1", "e1*", "e0"]);
    }

    #[test]
    fn witt_star_pairings_are_compatible() {
        for n in 0..3 {
            for m in 0..3 {
                for odd in [false, true] {
                    let sp = SuperSpace::witt(n, odd, m);
                    let star = sp.star().unwrap().clone();
                    assert!(sp.clone().with_star(star).is_ok());
                }
            }
        }
    }

    #[test]
    fn naive_symplectic_swap_is_not_compatible() {
        // ξ* = ξ^, ξ^* = ξ would flip the sign of ω.
        let sp = SuperSpace::witt(0, false, 1);
        let bad = StarPairing { even: vec![], odd: vec![(1, s(1)), (0, s(1))] };
        assert!(matches!(sp.with_star(bad), Err(Error::BadStarPairing(_))));
    }

    #[test]
    fn orthonormal_to_witt_transports_gram() {
        let sp = SuperSpace::euclidean(2, 0);
        let (witt, change) = orthonormal_to_witt(&sp).unwrap();
        let half_r2 = Scalar::sqrt2() * Scalar::rational(1, 2);
        assert_eq!(change[0], vec![half_r2.clone(), &half_r2 * &Scalar::i()]);
        let transported = linalg::matmul(&linalg::matmul(&change, sp.gram()), &linalg::transpose(&change));
        assert_eq!(&transported, witt.gram());
        assert_eq!(transported[0][0], Scalar::zero());
        assert_eq!(transported[0][1], Scalar::one());
        assert_eq!(orthonormal_to_witt(&SuperSpace::euclidean(3, 0)).unwrap_err(), Error::OddDimension);
    }

    #[test]
    fn descriptor_round_trip() {
        let sp = SuperSpace::witt(1, true, 1);
        let text = sp.to_descriptor();
        let back = SuperSpace::parse_descriptor(&text).unwrap();
        assert_eq!(back.gram(), sp.gram());
        assert_eq!(back.omega(), sp.omega());
        assert_eq!(back.star(), sp.star());
        assert_eq!(back.even_labels(), sp.even_labels());
    }

    #[test]
    fn descriptor_plain_rows() {
        let text = "# a plane\nspace 2 2\nG\n1 0\n0 1+i\nW\n0 1\n-1 0\n";
        let sp = SuperSpace::parse_descriptor(text).unwrap();
        assert_eq!(sp.g(1, 1), &Scalar::parse("1 + i").unwrap());
        assert!(matches!(SuperSpace::parse_descriptor("G\n1\n"), Err(Error::Parse { .. })));
        assert!(matches!(SuperSpace::parse_descriptor("space 1 0\nG\n1 2\n"), Err(Error::Shape(_))));
    }

    #[test]
    fn weight_display() {
        let w = WeightVector { h: vec![1, -1], k: vec![2] };
        assert_eq!(w.to_string(), "H1-H2+2K1");
        assert_eq!(WeightVector::zero(1, 1).to_string(), "0");
        assert_eq!(WeightVector { h: vec![0], k: vec![-1] }.to_string(), "-K1");
    }
}
