use super::{BraidData, BraidError, LaurentPoly};
use crate::orbit::cycle_count;

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity(m: usize) -> Matrix {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| LaurentPoly::constant((i == j) as i128))
                .collect()
        })
        .collect()
}

/// Reduced Burau representation of the braid word, an `(n-1) x (n-1)`
/// matrix over `Z[s]`.
pub fn burau_matrix(strands: usize, word: &[usize]) -> Result<Vec<Vec<LaurentPoly>>, BraidError> {
    let m = strands.saturating_sub(1);
    let mut r = identity(m);
    let minus_s = LaurentPoly::monomial(-1, 1);
    let s = LaurentPoly::monomial(1, 1);
    let one = LaurentPoly::constant(1);
    for &g in word {
        if g == 0 || g > m {
            return Err(BraidError::GeneratorOutOfRange {
                generator: g,
                strands,
            });
        }
        let i = g - 1;
        // The generator matrix differs from the identity only in row i, so
        // right multiplication rewrites columns i-1, i and i+1.
        for row in r.iter_mut() {
            let pivot = row[i].clone();
            row[i] = pivot.mul(&minus_s)?;
            if i > 0 {
                row[i - 1] = row[i - 1].add(&pivot.mul(&s)?)?;
            }
            if i + 1 < m {
                row[i + 1] = row[i + 1].add(&pivot.mul(&one)?)?;
            }
        }
    }
    Ok(r)
}

/// Fraction-free determinant (Bareiss) over `Z[s]`.
fn determinant(mut a: Matrix) -> Result<LaurentPoly, BraidError> {
    let m = a.len();
    if m == 0 {
        return Ok(LaurentPoly::constant(1));
    }
    let mut prev = LaurentPoly::constant(1);
    let mut negate = false;
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = a[i][j].mul(&a[k][k])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if negate {
        det.neg()
    } else {
        Ok(det)
    }
}

/// Alexander polynomial of the closure of a braid that closes to a knot,
/// `det(I - B(s)) / (1 + s + ... + s^(n-1))`, normalized to be symmetric
/// about degree 0 with `value(1) = 1`.
pub fn alexander_polynomial(braid: &BraidData) -> Result<LaurentPoly, BraidError> {
    let components = cycle_count(&braid.pi);
    if components != 1 {
        return Err(BraidError::MultiComponent { components });
    }
    let n = braid.strands;
    let b = burau_matrix(n, &braid.word)?;
    let m = b.len();
    let mut a = b;
    for (i, row) in a.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let id = LaurentPoly::constant((i == j) as i128);
            *entry = id.sub(entry)?;
        }
    }
    debug_assert_eq!(a.len(), m);
    let det = determinant(a)?;
    let cyclotomic = LaurentPoly::new(0, vec![1; n]);
    let delta = det.div_exact(&cyclotomic)?;
    if delta.is_zero() {
        return Err(BraidError::InexactDivision);
    }
    let span = delta.max_degree() - delta.min_degree();
    if span % 2 != 0 {
        return Err(BraidError::InexactDivision);
    }
    let centred = delta.shift(-delta.min_degree() - span / 2);
    match centred.eval_one()? {
        1 => Ok(centred),
        -1 => centred.neg(),
        _ => Err(BraidError::InexactDivision),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::lorenz_braid;
    use crate::orbit::OrbitCombinatorics;

    fn alex(w: &str) -> LaurentPoly {
        alexander_polynomial(&lorenz_braid(&OrbitCombinatorics::new(&w.parse().unwrap()))).unwrap()
    }

    #[test]
    fn unknot_trefoil_and_cinquefoil() {
        assert_eq!(alex("xy"), LaurentPoly::constant(1));
        assert_eq!(alex("xyxyy"), LaurentPoly::new(-1, vec![1, -1, 1]));
        assert_eq!(
            alex("xxxyyyxyy"),
            LaurentPoly::new(-2, vec![1, -1, 1, -1, 1])
        );
    }

    #[test]
    fn two_component_braid_is_rejected() {
        use crate::braid::Origin;
        let b = BraidData {
            strands: 2,
            pi: vec![0, 1],
            origin: vec![Origin::Left, Origin::Right],
            word: vec![1, 1],
            k: 2,
        };
        assert_eq!(
            alexander_polynomial(&b),
            Err(BraidError::MultiComponent { components: 2 })
        );
    }

    #[test]
    fn burau_of_sigma_one_on_two_strands() {
        let m = burau_matrix(2, &[1]).unwrap();
        assert_eq!(m, vec![vec![LaurentPoly::monomial(-1, 1)]]);
        assert_eq!(
            burau_matrix(2, &[2]),
            Err(BraidError::GeneratorOutOfRange {
                generator: 2,
                strands: 2
            })
        );
    }
}
