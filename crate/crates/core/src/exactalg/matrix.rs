use super::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// # Panics
    /// If the rows do not all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            entries.extend(row);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_integer_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Rank over the rationals.
    ///
    /// Each row is scaled to integers, then reduced with Bareiss' fraction-free
    /// elimination: every intermediate entry is a minor of the integer matrix,
    /// so the division by the previous pivot is exact.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == a.len() {
                break;
            }
            let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let (head, tail) = a.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let pivot = &pivot_row[col];
            for row in tail.iter_mut() {
                let factor = row[col].clone();
                for j in col + 1..self.cols {
                    let v = pivot * &row[j] - &factor * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[col] = BigInt::zero();
            }
            prev = pivot.clone();
            rank += 1;
        }
        rank
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use proptest::prelude::*;

    /// Plain Gauss-Jordan over the rationals; shares nothing with Bareiss.
    #[allow(clippy::needless_range_loop)]
    fn oracle_rank(m: &RationalMatrix) -> usize {
        let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for x in rows[rank].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in 0..m.cols() {
                        let d = &f * &rows[rank][j];
                        rows[r][j] = &rows[r][j] - &d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Rows (1, indicator of {i,j}) for the six 2-subsets of {1,2,3,4}.
    fn pair_matrix() -> RationalMatrix {
        let mut rows = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let mut r = vec![1i64, 0, 0, 0, 0];
                r[1 + i] = 1;
                r[1 + j] = 1;
                rows.push(r);
            }
        }
        RationalMatrix::from_integer_rows(5, &rows)
    }

    #[test]
    fn empty_and_identity() {
        assert_eq!(RationalMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(RationalMatrix::zeros(3, 0).rank(), 0);
        assert_eq!(RationalMatrix::zeros(0, 4).rank(), 0);
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn pair_indicator_matrix_has_rank_four() {
        let m = pair_matrix();
        assert_eq!(oracle_rank(&m), 4);
        assert_eq!(m.rank(), 4);
        assert_eq!(m.transpose().rank(), 4);
    }

    #[test]
    fn fractional_entries() {
        let m = RationalMatrix::from_rows(
            2,
            vec![
                vec![ratio(1, 2), ratio(1, 3)],
                vec![ratio(3, 2), ratio(1, 1)],
            ],
        );
        assert_eq!(m.rank(), 1);
    }

    fn arb_matrix() -> impl Strategy<Value = RationalMatrix> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec((-3i64..4, 1i64..4), r * c).prop_map(move |v| {
                // Sparse-ish entries so that rank deficiency actually happens.
                let rows = v
                    .chunks(c.max(1))
                    .take(r)
                    .map(|ch| {
                        ch.iter()
                            .map(|&(n, d)| if n.abs() > 1 { ratio(0, 1) } else { ratio(n, d) })
                            .collect()
                    })
                    .collect();
                RationalMatrix::from_rows(c, if c == 0 { vec![vec![]; r] } else { rows })
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_gauss_jordan(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), oracle_rank(&m));
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn invariant_under_permutation_and_column_ops(
            m in arb_matrix(),
            seed in any::<u64>(),
            num in -5i64..6,
        ) {
            prop_assume!(m.cols() >= 2 && m.rows() >= 1);
            let r = m.rank();
            let (rows, cols) = (m.rows(), m.cols());
            let rp = (seed as usize) % rows;
            let cp = (seed as usize / 7) % cols;
            let src = (seed as usize / 13) % cols;
            let dst = (src + 1) % cols;
            let factor = ratio(num, 3);
            let mut out = RationalMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    let ii = if i == 0 { rp } else if i == rp { 0 } else { i };
                    let jj = if j == 0 { cp } else if j == cp { 0 } else { j };
                    out.set(i, j, m.get(ii, jj).clone());
                }
            }
            prop_assert_eq!(out.rank(), r);
            for i in 0..rows {
                let v = out.get(i, dst) + &factor * out.get(i, src);
                out.set(i, dst, v);
            }
            prop_assert_eq!(out.rank(), r);
        }
    }
}
