use std::fmt;

/// Bit vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_bools(bits: impl IntoIterator<Item = bool>) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = BitVec::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense matrix over GF(2), stored as one [`BitVec`] per row.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows: vec![BitVec::zeros(cols); rows], cols }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r].flip(c)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    pub fn column(&self, c: usize) -> BitVec {
        BitVec::from_bools(self.rows.iter().map(|row| row.get(c)))
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.num_rows());
        let mut out = Gf2Matrix::zeros(self.rows.len(), other.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for k in row.ones() {
                out.rows[r].xor_assign(&other.rows[k]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// Row echelon form by elimination, pivoting on the first nonzero entry.
    pub fn echelon(&self) -> Gf2Matrix {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(c)) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
        Gf2Matrix { rows, cols: self.cols }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rows.iter().filter(|r| !r.is_zero()).count()
    }

    /// Basis of the null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<BitVec> {
        let ech = self.echelon();
        let mut pivots = Vec::new();
        for row in &ech.rows {
            if let Some(c) = row.first_one() {
                pivots.push(c);
            }
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &pc) in ech.rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows.len(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Incremental basis that can express vectors in terms of the inserted
/// generators.
#[derive(Clone, Debug)]
pub(crate) struct SpanTracker {
    /// Reduced vectors with their pivot, plus the generator combination.
    rows: Vec<(usize, BitVec, BitVec)>,
    generators: usize,
    capacity: usize,
}

impl SpanTracker {
    pub fn new(capacity: usize) -> Self {
        SpanTracker { rows: Vec::new(), generators: 0, capacity }
    }

    /// Reduces `v` against the current rows; returns the remainder and the
    /// generator combination that was subtracted.
    fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut rem = v.clone();
        let mut combo = BitVec::zeros(self.capacity);
        for (pivot, row, c) in &self.rows {
            if rem.get(*pivot) {
                rem.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (rem, combo)
    }

    /// Adds `v` as the next generator if it is independent.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let (rem, mut combo) = self.reduce(v);
        let Some(pivot) = rem.first_one() else { return false };
        combo.set(self.generators, true);
        self.generators += 1;
        // Keep rows fully reduced on their pivots.
        for (_, row, c) in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&rem);
                c.xor_assign(&combo);
            }
        }
        self.rows.push((pivot, rem, combo));
        true
    }

    /// Coefficients of `v` in the generators, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        let (rem, combo) = self.reduce(v);
        rem.is_zero().then_some(combo)
    }
}
