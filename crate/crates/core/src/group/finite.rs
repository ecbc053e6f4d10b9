//! Small finite groups given by multiplication tables, and exact
//! homomorphism counting from a finite presentation into them.

use std::collections::BTreeMap;

use crate::error::WordError;
use crate::group::presentation::Presentation;

/// Upper bound on `order^generators` for exhaustive homomorphism counting.
pub const HOM_COUNT_LIMIT: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    id: usize,
}

impl FiniteGroupTable {
    /// Builds a group from its multiplication table, checking closure,
    /// associativity, and the existence of an identity and of inverses.
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self, WordError> {
        let order = mul.len();
        let bad = |m: &str| Err(WordError::InvalidGroupTable(m.to_string()));
        if order == 0 {
            return bad("empty table");
        }
        if mul.iter().any(|row| row.len() != order || row.iter().any(|&x| x >= order)) {
            return bad("table is not closed");
        }
        let Some(id) = (0..order).find(|&e| (0..order).all(|a| mul[e][a] == a && mul[a][e] == a)) else {
            return bad("no identity element");
        };
        let mut inv = vec![0; order];
        for a in 0..order {
            match (0..order).find(|&b| mul[a][b] == id && mul[b][a] == id) {
                Some(b) => inv[a] = b,
                None => return bad("missing inverse"),
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        Ok(FiniteGroupTable { order, mul, inv, id })
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroupTable::new(mul).expect("cyclic table")
    }

    /// The permutation group generated by `gens` (all acting on the same
    /// point set), composed right to left.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self, WordError> {
        let degree = gens.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mut elements = vec![identity];
        let mut index = BTreeMap::from([(elements[0].clone(), 0usize)]);
        let mut next = 0;
        while next < elements.len() {
            for g in gens {
                let prod = compose(g, &elements[next]);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
            next += 1;
        }
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        FiniteGroupTable::new(mul)
    }

    pub fn symmetric3() -> Self {
        FiniteGroupTable::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).expect("S3 table")
    }

    /// Symmetries of a square, acting on its vertices.
    pub fn dihedral4() -> Self {
        FiniteGroupTable::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).expect("D4 table")
    }

    /// Quaternion group, as left multiplication on `1, i, j, k, -1, -i, -j, -k`.
    pub fn quaternion() -> Self {
        let left_i = vec![1, 4, 3, 6, 5, 0, 7, 2];
        let left_j = vec![2, 7, 4, 1, 6, 3, 0, 5];
        FiniteGroupTable::from_permutations(&[left_i, left_j]).expect("Q8 table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.id {
            x = self.mul[x][a];
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul[a][b] == self.mul[b][a]))
    }
}

/// The fixed oracle catalog `Z_2, Z_3, S_3, D_4, Q_8`.
pub fn catalog() -> Vec<(&'static str, FiniteGroupTable)> {
    vec![
        ("Z2", FiniteGroupTable::cyclic(2)),
        ("Z3", FiniteGroupTable::cyclic(3)),
        ("S3", FiniteGroupTable::symmetric3()),
        ("D4", FiniteGroupTable::dihedral4()),
        ("Q8", FiniteGroupTable::quaternion()),
    ]
}

/// Number of homomorphisms from the group presented by `p` to `g`, by
/// exhaustive assignment of generator images.
pub fn hom_count(p: &Presentation, g: &FiniteGroupTable) -> Result<u64, WordError> {
    let n = p.rank();
    let too_large = WordError::TooLarge { order: g.order, generators: n };
    match (g.order as u128).checked_pow(n as u32) {
        Some(total) if total <= HOM_COUNT_LIMIT => {}
        _ => return Err(too_large),
    }
    let relators: Vec<Vec<(usize, bool)>> = p
        .relators()
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|l| {
                    p.position(l.gen())
                        .map(|i| (i, l.is_inverse()))
                        .ok_or_else(|| WordError::UnknownGenerator(l.gen().to_string()))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;

    let mut assignment = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let ok = relators.iter().all(|r| {
            let mut x = g.id;
            for &(i, inverse) in r {
                let y = if inverse { g.inv[assignment[i]] } else { assignment[i] };
                x = g.mul[x][y];
            }
            x == g.id
        });
        if ok {
            count += 1;
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(count);
            }
            assignment[pos] += 1;
            if assignment[pos] < g.order {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}
