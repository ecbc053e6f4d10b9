//! Todd–Coxeter coset enumeration (HLT strategy with coincidence processing).

use crate::error::WordError;
use crate::group::presentation::Presentation;
use crate::group::word::Word;

/// Result of a coset enumeration. `Overflow` means "not decided within the
/// budget"; it never claims the index is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetOutcome {
    Index(usize),
    Overflow { max_cosets: usize },
}

impl CosetOutcome {
    pub fn index(self) -> Option<usize> {
        match self {
            CosetOutcome::Index(n) => Some(n),
            CosetOutcome::Overflow { .. } => None,
        }
    }
}

const UNDEF: usize = usize::MAX;

struct Overflowed;

struct Table {
    // column 2g is generator g, column 2g+1 its inverse
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    cols: usize,
    max_cosets: usize,
}

impl Table {
    fn new(generators: usize, max_cosets: usize) -> Self {
        let cols = 2 * generators;
        Table { rows: vec![vec![UNDEF; cols]], parent: vec![0], queue: Vec::new(), cols, max_cosets }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Overflowed> {
        if self.rows.len() >= self.max_cosets {
            return Err(Overflowed);
        }
        let d = self.rows.len();
        self.rows.push(vec![UNDEF; self.cols]);
        self.parent.push(d);
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = c;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop] = keep;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut next = 0;
        while next < self.queue.len() {
            let e = self.queue[next];
            next += 1;
            for x in 0..self.cols {
                let f = self.rows[e][x];
                if f == UNDEF {
                    continue;
                }
                if self.rows[f][x ^ 1] == e {
                    self.rows[f][x ^ 1] = UNDEF;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.rows[e1][x] != UNDEF {
                    let t = self.rows[e1][x];
                    self.merge(f1, t);
                } else if self.rows[f1][x ^ 1] != UNDEF {
                    let t = self.rows[f1][x ^ 1];
                    self.merge(e1, t);
                } else {
                    self.rows[e1][x] = f1;
                    self.rows[f1][x ^ 1] = e1;
                }
            }
        }
    }

    /// Traces `word` from coset `c` in both directions, defining new cosets
    /// to close the gap and recording deductions or coincidences.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), Overflowed> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, word.len() as isize - 1);
        loop {
            while i <= j && self.rows[f][word[i as usize]] != UNDEF {
                f = self.rows[f][word[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.rows[b][word[j as usize] ^ 1] != UNDEF {
                b = self.rows[b][word[j as usize] ^ 1];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.rows[f][x] = b;
                self.rows[b][x ^ 1] = f;
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

fn encode(p: &Presentation, w: &Word) -> Result<Vec<usize>, WordError> {
    w.letters()
        .iter()
        .map(|l| {
            let g = p.position(l.gen()).ok_or_else(|| WordError::UnknownGenerator(l.gen().to_string()))?;
            Ok(2 * g + usize::from(l.is_inverse()))
        })
        .collect()
}

/// Index of the subgroup generated by `subgroup` in the group presented by
/// `p`; with an empty subgroup list this is the group order.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetOutcome, WordError> {
    let relators = p.relators().iter().map(|r| encode(p, r)).collect::<Result<Vec<_>, _>>()?;
    let subgens = subgroup.iter().map(|w| encode(p, w)).collect::<Result<Vec<_>, _>>()?;
    let overflow = CosetOutcome::Overflow { max_cosets };
    if max_cosets == 0 {
        return Ok(overflow);
    }

    let mut table = Table::new(p.rank(), max_cosets);
    for w in &subgens {
        if table.scan_and_fill(0, w).is_err() {
            return Ok(overflow);
        }
    }
    let mut c = 0;
    while c < table.rows.len() {
        for r in &relators {
            if !table.alive(c) {
                break;
            }
            if table.scan_and_fill(c, r).is_err() {
                return Ok(overflow);
            }
        }
        if table.alive(c) {
            for x in 0..table.cols {
                if table.rows[c][x] == UNDEF && table.define(c, x).is_err() {
                    return Ok(overflow);
                }
            }
        }
        c += 1;
    }
    Ok(CosetOutcome::Index((0..table.rows.len()).filter(|&c| table.alive(c)).count()))
}
