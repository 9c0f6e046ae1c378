//! A small polycyclic presentation engine.
//!
//! Generators g_0 … g_{m-1} carry relative orders o_i; every element has a
//! unique normal form g_0^{e_0}···g_{m-1}^{e_{m-1}} with 0 ≤ e_i < o_i.
//! Relations are power words g_i^{o_i} = w_i and conjugation words
//! g_j^{g_i} = w_{ij} for i < j, both over strictly deeper generators.
//! Multiplication is collection: right-multiplying by a generator moves it
//! left past deeper blocks, rewriting with the conjugation words.

/// A word over pc generators: (generator index, positive exponent) pairs.
pub type PcWord = Vec<(usize, u32)>;

#[derive(Clone, Debug)]
pub struct PcPresentation {
    /// Relative order of each generator.
    pub orders: Vec<u32>,
    /// `powers[i]` is the word for g_i^(orders\[i\]) over generators > i.
    pub powers: Vec<PcWord>,
    /// `conj[i][j]` for i < j is the word for g_j^(g_i) = g_i⁻¹ g_j g_i over
    /// generators > i; `None` means g_j and g_i commute.
    pub conj: Vec<Vec<Option<PcWord>>>,
}

impl PcPresentation {
    pub fn new(orders: Vec<u32>) -> Self {
        let m = orders.len();
        assert!(orders.iter().all(|&o| o >= 2 || m == 1 && o >= 1));
        PcPresentation {
            powers: vec![Vec::new(); m],
            conj: (0..m).map(|_| vec![None; m]).collect(),
            orders,
        }
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    pub fn set_power(&mut self, i: usize, word: PcWord) {
        debug_assert!(word.iter().all(|&(l, _)| l > i));
        self.powers[i] = word;
    }

    pub fn set_conj(&mut self, deep: usize, shallow: usize, word: PcWord) {
        assert!(shallow < deep);
        debug_assert!(word.iter().all(|&(l, _)| l > shallow));
        self.conj[shallow][deep] = Some(word);
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&o| o as u64).product()
    }

    /// Right-multiply a normal form in place by generator g.
    pub fn mul_gen(&self, e: &mut [u32], g: usize) {
        // peel off the components deeper than g; the generator crosses them
        let tail: Vec<(usize, u32)> = (g + 1..self.ngens())
            .filter(|&h| e[h] > 0)
            .map(|h| (h, e[h]))
            .collect();
        for &(h, _) in &tail {
            e[h] = 0;
        }
        self.bump(e, g);
        for (h, a) in tail {
            match &self.conj[g][h] {
                None => {
                    // commutes: restore the block directly
                    for _ in 0..a {
                        self.bump(e, h);
                    }
                }
                Some(w) => {
                    for _ in 0..a {
                        for &(l, c) in w {
                            for _ in 0..c {
                                self.mul_gen(e, l);
                            }
                        }
                    }
                }
            }
        }
    }

    fn bump(&self, e: &mut [u32], g: usize) {
        e[g] += 1;
        if e[g] == self.orders[g] {
            e[g] = 0;
            let w = self.powers[g].clone();
            for (l, c) in w {
                for _ in 0..c {
                    self.mul_gen(e, l);
                }
            }
        }
    }

    /// Right-multiply by a full normal form.
    pub fn mul_tuple(&self, e: &mut [u32], rhs: &[u32]) {
        for (g, &a) in rhs.iter().enumerate() {
            for _ in 0..a {
                self.mul_gen(e, g);
            }
        }
    }

    /// Mixed-radix strides with the deepest generator fastest, so that the
    /// identity is index 0 and removing one deepest letter decreases the
    /// index.
    pub fn strides(&self) -> Vec<usize> {
        let m = self.ngens();
        let mut s = vec![1usize; m];
        for i in (0..m.saturating_sub(1)).rev() {
            s[i] = s[i + 1] * self.orders[i + 1] as usize;
        }
        s
    }

    pub fn index_of(&self, e: &[u32], strides: &[usize]) -> usize {
        e.iter().zip(strides).map(|(&x, &s)| x as usize * s).sum()
    }

    pub fn tuple_of(&self, mut idx: usize, strides: &[usize]) -> Vec<u32> {
        let mut e = vec![0u32; self.ngens()];
        for i in 0..self.ngens() {
            e[i] = (idx / strides[i]) as u32;
            idx %= strides[i];
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Quaternion group Q8: b(2) with b² = a², a(4), a^b = a³.
    fn q8() -> PcPresentation {
        let mut p = PcPresentation::new(vec![2, 4]);
        p.set_power(0, vec![(1, 2)]);
        p.set_conj(1, 0, vec![(1, 3)]);
        p
    }

    #[test]
    fn q8_collection() {
        let p = q8();
        assert_eq!(p.order(), 8);
        // b·b = a²
        let mut e = vec![0, 0];
        p.mul_gen(&mut e, 0);
        p.mul_gen(&mut e, 0);
        assert_eq!(e, vec![0, 2]);
        // a·b = b·a³ in normal form
        let mut e = vec![0, 1];
        p.mul_gen(&mut e, 0);
        assert_eq!(e, vec![1, 3]);
        // a⁴ = 1
        let mut e = vec![0, 0];
        for _ in 0..4 {
            p.mul_gen(&mut e, 1);
        }
        assert_eq!(e, vec![0, 0]);
    }

    #[test]
    fn q8_associativity_exhaustive() {
        let p = q8();
        let strides = p.strides();
        let elems: Vec<Vec<u32>> = (0..8).map(|i| p.tuple_of(i, &strides)).collect();
        let mul = |a: &[u32], b: &[u32]| {
            let mut e = a.to_vec();
            p.mul_tuple(&mut e, b);
            e
        };
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
                }
            }
        }
    }
}
