//! Smith normal form over the integers and the abelianization invariant.

use serde::Serialize;

use crate::group::presentation::Presentation;

/// Free rank and torsion coefficients of an abelianized presentation.
/// Torsion coefficients are sorted and each divides the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z^{}", self.rank)?;
        for t in &self.torsion {
            write!(f, " + Z/{t}")?;
        }
        Ok(())
    }
}

/// Non-zero invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<u64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            // smallest non-zero entry of the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    add_row(&mut a, i, t, -q, t);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => add_row(&mut a, t, i, 1, t),
                None => {
                    diag.push(p.unsigned_abs() as u64);
                    break;
                }
            }
        }
    }
    diag
}

/// `a[dst] += factor * a[src]`, columns from `from` on.
fn add_row(a: &mut [Vec<i128>], dst: usize, src: usize, factor: i128, from: usize) {
    let src_row = a[src].clone();
    for (d, x) in a[dst][from..].iter_mut().zip(&src_row[from..]) {
        *d += factor * x;
    }
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let factors = invariant_factors(&p.exponent_matrix());
    let rank = p.rank() - factors.len();
    let torsion = factors.into_iter().filter(|&d| d > 1).collect();
    Abelianization { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::word::{GenId, Word};

    #[test]
    fn diagonal_examples() {
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(invariant_factors(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(invariant_factors(&[]), Vec::<u64>::new());
        assert_eq!(invariant_factors(&[vec![4, 6]]), vec![2]);
    }

    #[test]
    fn small_presentations() {
        let free = Presentation::free(&["a", "b", "c"]).unwrap();
        assert_eq!(abelianization(&free), Abelianization { rank: 3, torsion: vec![] });

        let x = GenId::new("x").unwrap();
        let z2 = Presentation::new(vec![x.clone()], vec![Word::gen(&x).pow(2)]).unwrap();
        assert_eq!(abelianization(&z2), Abelianization { rank: 0, torsion: vec![2] });

        let trivial = Presentation::new(vec![x.clone()], vec![Word::gen(&x)]).unwrap();
        assert_eq!(abelianization(&trivial), Abelianization { rank: 0, torsion: vec![] });
    }
}
