use std::sync::OnceLock;

use crate::exactnum::{int, ParamValue};

pub type Root = [i64; 4];

/// The 24 vectors `±eᵢ ± eⱼ` (i < j) of the sixth-family parameter space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    roots: Vec<Root>,
}

impl RootSystem {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }
}

pub fn root_system() -> &'static RootSystem {
    static ROOTS: OnceLock<RootSystem> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let mut roots = Vec::with_capacity(24);
        for i in 0..4 {
            for j in (i + 1)..4 {
                for si in [1, -1] {
                    for sj in [1, -1] {
                        let mut r = [0; 4];
                        r[i] = si;
                        r[j] = sj;
                        roots.push(r);
                    }
                }
            }
        }
        RootSystem { roots }
    })
}

/// A signed permutation acting by `(g·v)ᵢ = signᵢ · v_{perm[i]}`.
pub type SignedPermutation = ([usize; 4], [i8; 4]);

/// The 192 signed permutations of four coordinates with an even number of
/// sign changes, identity first.
pub fn even_signed_permutations() -> &'static [SignedPermutation] {
    static GROUP: OnceLock<Vec<SignedPermutation>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let mut out = Vec::with_capacity(192);
        for perm in permutations4() {
            for mask in 0u8..16 {
                if mask.count_ones() % 2 != 0 {
                    continue;
                }
                let signs = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
                out.push((perm, signs));
            }
        }
        out
    })
}

/// All 24 permutations of `0..4` in lexicographic order.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// `⟨v, α⟩ = Σ vᵢαᵢ`.
pub fn inner_product(v: &[ParamValue], alpha: &[i64]) -> ParamValue {
    assert_eq!(v.len(), alpha.len(), "dimension mismatch");
    v.iter()
        .zip(alpha)
        .fold(ParamValue::zero(), |acc, (x, &a)| &acc + &(x * &int(a)))
}
