use serde::Serialize;

/// The integers `n = ⌊N/2⌋`, `n' = ⌈N/2⌉` and `ε = n' − n` attached to a chain length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChainShape {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub n_prime: usize,
    pub eps: usize,
}

impl ChainShape {
    pub fn new(big_n: usize) -> Self {
        let n = big_n / 2;
        let n_prime = big_n - n;
        ChainShape {
            big_n,
            n,
            n_prime,
            eps: n_prime - n,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.eps == 1
    }

    /// Order `2N+1` of the matching TSASMs.
    pub fn order(&self) -> usize {
        2 * self.big_n + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for big_n in 0..20 {
            let s = ChainShape::new(big_n);
            assert_eq!(s.n + s.n_prime, big_n);
            assert!(s.eps <= 1);
        }
        let s = ChainShape::new(7);
        assert_eq!((s.n, s.n_prime, s.eps), (3, 4, 1));
    }
}
