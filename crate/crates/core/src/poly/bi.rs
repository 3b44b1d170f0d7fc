use super::{PolyError, UniPoly};
use crate::field::{Fe, FieldCtx};

/// Dense bivariate polynomial. Coefficient `(i, j)` belongs to `X^i Y^j`.
///
/// The grid is trimmed so that the last row and the last column each hold a
/// non-zero entry; the zero polynomial has an empty grid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    rows: usize,
    cols: usize,
    grid: Vec<Fe>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    /// Builds from `(i, j, c)` terms; repeated monomials are summed.
    pub fn from_terms(terms: &[(usize, usize, Fe)], k: &FieldCtx) -> BiPoly {
        let rows = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let cols = terms.iter().map(|t| t.1 + 1).max().unwrap_or(0);
        let mut out = BiPoly {
            rows,
            cols,
            grid: vec![Fe::ZERO; rows * cols],
        };
        for &(i, j, c) in terms {
            let slot = &mut out.grid[i * cols + j];
            *slot = k.add(*slot, c);
        }
        out.trimmed()
    }

    /// Terms given with integer coefficients reduced into the prime field.
    pub fn from_int_terms(terms: &[(usize, usize, i64)], k: &FieldCtx) -> BiPoly {
        let t: Vec<_> = terms.iter().map(|&(i, j, c)| (i, j, k.from_int(c))).collect();
        BiPoly::from_terms(&t, k)
    }

    /// `f(X)` viewed as a bivariate polynomial.
    pub fn from_uni_x(f: &UniPoly) -> BiPoly {
        BiPoly {
            rows: f.coeffs().len(),
            cols: usize::from(!f.is_zero()),
            grid: f.coeffs().to_vec(),
        }
        .trimmed()
    }

    /// `f(Y)` viewed as a bivariate polynomial.
    pub fn from_uni_y(f: &UniPoly) -> BiPoly {
        BiPoly::from_uni_x(f).transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.rows.checked_sub(1)
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.cols.checked_sub(1)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(i, j, _)| i + j).max()
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize) -> Fe {
        if i < self.rows && j < self.cols {
            self.grid[i * self.cols + j]
        } else {
            Fe::ZERO
        }
    }

    /// Non-zero terms, ordered by `i` then `j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Fe)> + '_ {
        (0..self.rows).flat_map(move |i| {
            (0..self.cols).filter_map(move |j| {
                let c = self.grid[i * self.cols + j];
                (!c.is_zero()).then_some((i, j, c))
            })
        })
    }

    fn trimmed(mut self) -> BiPoly {
        let mut rows = self.rows;
        while rows > 0 && (0..self.cols).all(|j| self.grid[(rows - 1) * self.cols + j].is_zero()) {
            rows -= 1;
        }
        let mut cols = self.cols;
        while cols > 0 && (0..rows).all(|i| self.grid[i * self.cols + cols - 1].is_zero()) {
            cols -= 1;
        }
        if rows == 0 || cols == 0 {
            return BiPoly::zero();
        }
        if rows != self.rows || cols != self.cols {
            let mut grid = Vec::with_capacity(rows * cols);
            for i in 0..rows {
                grid.extend_from_slice(&self.grid[i * self.cols..i * self.cols + cols]);
            }
            self.grid = grid;
        }
        self.rows = rows;
        self.cols = cols;
        self
    }

    fn zip_with(&self, other: &BiPoly, f: impl Fn(Fe, Fe) -> Fe) -> BiPoly {
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        let mut grid = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                grid.push(f(self.coeff(i, j), other.coeff(i, j)));
            }
        }
        BiPoly { rows, cols, grid }.trimmed()
    }

    pub fn add(&self, other: &BiPoly, k: &FieldCtx) -> BiPoly {
        self.zip_with(other, |a, b| k.add(a, b))
    }

    pub fn sub(&self, other: &BiPoly, k: &FieldCtx) -> BiPoly {
        self.zip_with(other, |a, b| k.sub(a, b))
    }

    pub fn scale(&self, c: Fe, k: &FieldCtx) -> BiPoly {
        self.map_coeffs(|x| k.mul(x, c))
    }

    pub fn map_coeffs(&self, f: impl Fn(Fe) -> Fe) -> BiPoly {
        BiPoly {
            rows: self.rows,
            cols: self.cols,
            grid: self.grid.iter().map(|&c| f(c)).collect(),
        }
        .trimmed()
    }

    pub fn mul(&self, other: &BiPoly, k: &FieldCtx) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let rows = self.rows + other.rows - 1;
        let cols = self.cols + other.cols - 1;
        let mut grid = vec![Fe::ZERO; rows * cols];
        for (i, j, a) in self.terms() {
            for (r, s, b) in other.terms() {
                let slot = &mut grid[(i + r) * cols + j + s];
                *slot = k.add(*slot, k.mul(a, b));
            }
        }
        BiPoly { rows, cols, grid }.trimmed()
    }

    pub fn pow(&self, e: u32, k: &FieldCtx) -> BiPoly {
        let mut acc = BiPoly::from_terms(&[(0, 0, Fe::ONE)], k);
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// `F(Y, X)`.
    pub fn transpose(&self) -> BiPoly {
        let mut grid = Vec::with_capacity(self.grid.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                grid.push(self.grid[i * self.cols + j]);
            }
        }
        BiPoly {
            rows: self.cols,
            cols: self.rows,
            grid,
        }
    }

    /// Coefficient-wise check of `F(X, Y) = F(Y, X)`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn eval(&self, x: Fe, y: Fe, k: &FieldCtx) -> Fe {
        let mut acc = Fe::ZERO;
        for i in (0..self.rows).rev() {
            let row = &self.grid[i * self.cols..(i + 1) * self.cols];
            let inner = row.iter().rev().fold(Fe::ZERO, |a, &c| k.add(k.mul(a, y), c));
            acc = k.add(k.mul(acc, x), inner);
        }
        acc
    }

    /// `F(x, Y)` as a polynomial in `Y`.
    pub fn eval_x(&self, x: Fe, k: &FieldCtx) -> UniPoly {
        let mut out = vec![Fe::ZERO; self.cols];
        for i in (0..self.rows).rev() {
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = k.add(k.mul(*slot, x), self.grid[i * self.cols + j]);
            }
        }
        UniPoly::from_coeffs(out)
    }

    /// `F(X, X)`.
    pub fn diagonal(&self, k: &FieldCtx) -> UniPoly {
        let mut out = vec![Fe::ZERO; self.rows + self.cols];
        for (i, j, c) in self.terms() {
            out[i + j] = k.add(out[i + j], c);
        }
        UniPoly::from_coeffs(out)
    }

    /// Homogeneous part of top total degree, as coefficients of
    /// `X^(D-j) Y^j` indexed by `j`.
    pub fn top_form(&self) -> Vec<Fe> {
        let Some(d) = self.total_degree() else {
            return Vec::new();
        };
        (0..=d).map(|j| self.coeff(d - j, j)).collect()
    }

    /// `X`-coefficients of `F` as polynomials in `Y`: `F = Σ h_i(Y) X^i`.
    pub fn rows_in_y(&self) -> Vec<UniPoly> {
        (0..self.rows)
            .map(|i| UniPoly::from_coeffs(self.grid[i * self.cols..(i + 1) * self.cols].to_vec()))
            .collect()
    }

    pub fn from_rows_in_y(rows: &[UniPoly], k: &FieldCtx) -> BiPoly {
        let mut terms = Vec::new();
        for (i, h) in rows.iter().enumerate() {
            for (j, &c) in h.coeffs().iter().enumerate() {
                terms.push((i, j, c));
            }
        }
        BiPoly::from_terms(&terms, k)
    }

    /// Exact quotient by `X - Y`; fails if `X - Y` does not divide.
    pub fn div_x_minus_y(&self, k: &FieldCtx) -> Result<BiPoly, PolyError> {
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        // synthetic division in X with the root Y
        let rows = self.rows_in_y();
        let y = UniPoly::x();
        let mut quot = vec![UniPoly::zero(); rows.len().saturating_sub(1)];
        let mut carry = UniPoly::zero();
        for i in (1..rows.len()).rev() {
            carry = rows[i].add(&carry.mul(&y, k), k);
            quot[i - 1] = carry.clone();
        }
        let remainder = rows[0].add(&carry.mul(&y, k), k);
        if !remainder.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        Ok(BiPoly::from_rows_in_y(&quot, k))
    }

    /// Text form: header `degX,degY` then one row per power of `X`.
    pub fn format(&self, k: &FieldCtx) -> String {
        let mut out = format!(
            "{},{}",
            self.deg_x().map_or(-1, |d| d as i64),
            self.deg_y().map_or(-1, |d| d as i64)
        );
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| k.format_short(self.coeff(i, j)))
                .collect();
            out.push('\n');
            out.push_str(&row.join(","));
        }
        out
    }

    pub fn parse(s: &str, k: &FieldCtx) -> Result<BiPoly, PolyError> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let bad = || PolyError::Parse(s.to_string());
        let header = lines.next().ok_or_else(bad)?;
        let (dx, dy) = header.split_once(',').ok_or_else(bad)?;
        let dx: i64 = dx.trim().parse().map_err(|_| bad())?;
        let dy: i64 = dy.trim().parse().map_err(|_| bad())?;
        let mut terms = Vec::new();
        for (i, line) in lines.enumerate() {
            for (j, tok) in line.split(',').enumerate() {
                terms.push((i, j, k.parse_short(tok)?));
            }
        }
        let f = BiPoly::from_terms(&terms, k);
        let got = (
            f.deg_x().map_or(-1, |d| d as i64),
            f.deg_y().map_or(-1, |d| d as i64),
        );
        if got != (dx, dy) {
            return Err(bad());
        }
        Ok(f)
    }
}
