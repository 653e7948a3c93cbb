//! Exact linear algebra on small integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer ring operations needed by fraction-free elimination. `step`
/// computes `(a*b - c*d) / e`, which is always an exact division in Bareiss
/// elimination; `None` signals overflow.
trait BareissRing: Clone {
    fn vanishes(&self) -> bool;
    fn unit() -> Self;
    fn step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl BareissRing for i128 {
    fn vanishes(&self) -> bool {
        *self == 0
    }

    fn unit() -> Self {
        1
    }

    fn step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        Some(x / e)
    }
}

impl BareissRing for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn unit() -> Self {
        One::one()
    }

    fn step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

fn bareiss_rank<T: BareissRing>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::unit();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].vanishes()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = T::step(&m[r][c], &m[i][j], &m[i][c], &m[r][j], &prev)?;
            }
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Some(r)
}

/// Rank over the rationals of the given integer rows.
pub fn rank(rows: &[&[BigInt]]) -> usize {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|row| row.iter().map(ToPrimitive::to_i128).collect())
        .collect();
    if let Some(r) = small.and_then(bareiss_rank) {
        return r;
    }
    bareiss_rank(rows.iter().map(|r| r.to_vec()).collect()).expect("BigInt never overflows")
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
pub fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Clears denominators of a rational row and divides out the gcd.
pub fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut v: Vec<BigInt> = row.iter().map(|x| (x * &l).to_integer()).collect();
    normalize(&mut v);
    v
}

/// A primitive integer generator of the kernel of `rows` (each of length
/// `dim`) when the kernel is one-dimensional; `None` otherwise.
pub fn kernel_vector(rows: &[&[BigInt]], dim: usize) -> Option<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() + 1 != dim {
        return None;
    }
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut x = vec![BigRational::zero(); dim];
    x[free] = BigRational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = -m[row][free].clone();
    }
    let mut v = integer_row(&x);
    if v.iter().find(|e| !e.is_zero()).is_some_and(|e| e.is_negative()) {
        for e in v.iter_mut() {
            *e = -&*e;
        }
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn rank_of(rows: &[&[i64]]) -> usize {
        let m = big(rows);
        let refs: Vec<&[BigInt]> = m.iter().map(Vec::as_slice).collect();
        rank(&refs)
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_of(&[&[1, 2], &[2, 4]]), 1);
        assert_eq!(rank_of(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]), 2);
        assert_eq!(rank_of(&[&[0, 0], &[0, 0]]), 0);
        assert_eq!(rank_of(&[&[0, 1], &[1, 0], &[1, 1]]), 2);
        assert_eq!(rank_of(&[]), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = i64::MAX;
        assert_eq!(
            rank_of(&[&[huge, huge - 1, 3], &[huge - 2, huge, 5], &[1, 1, 1]]),
            3
        );
        let a = BigInt::from(10).pow(40u32);
        let m = [vec![a.clone(), BigInt::from(1)], vec![a.clone() * 2, BigInt::from(2)]];
        let refs: Vec<&[BigInt]> = m.iter().map(Vec::as_slice).collect();
        assert_eq!(rank(&refs), 1);
    }

    #[test]
    fn kernel_of_corank_one() {
        let m = big(&[&[1, 1, 0], &[0, 1, 1]]);
        let refs: Vec<&[BigInt]> = m.iter().map(Vec::as_slice).collect();
        let v = kernel_vector(&refs, 3).unwrap();
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        assert!(kernel_vector(&refs[..1], 3).is_none());
    }

    #[test]
    fn integer_rows() {
        let row = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
        ];
        assert_eq!(integer_row(&row), vec![BigInt::from(2), BigInt::from(3)]);
    }
}
