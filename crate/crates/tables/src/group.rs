use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    #[serde(rename = "trivial")]
    Trivial,
    Z2,
    Z3,
    Z5,
    Z7,
    Z11,
    Q8,
    Z2xZ2,
    Z4,
}

impl GroupTag {
    pub const ALL: [GroupTag; 9] = [
        GroupTag::Trivial,
        GroupTag::Z2,
        GroupTag::Z3,
        GroupTag::Z5,
        GroupTag::Z7,
        GroupTag::Z11,
        GroupTag::Q8,
        GroupTag::Z2xZ2,
        GroupTag::Z4,
    ];

    pub fn order(self) -> u32 {
        match self {
            GroupTag::Trivial => 1,
            GroupTag::Z2 => 2,
            GroupTag::Z3 => 3,
            GroupTag::Z5 => 5,
            GroupTag::Z7 => 7,
            GroupTag::Z11 => 11,
            GroupTag::Q8 => 8,
            GroupTag::Z2xZ2 | GroupTag::Z4 => 4,
        }
    }

    /// Elements as multiplication-table indices, used to derive every other
    /// invariant from the group law directly.
    fn mul(self, a: u32, b: u32) -> u32 {
        match self {
            GroupTag::Z2xZ2 => a ^ b,
            GroupTag::Q8 => q8_mul(a, b),
            _ => (a + b) % self.order(),
        }
    }

    fn element_order(self, a: u32) -> u32 {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn element_orders(self) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_cyclic(self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    pub fn is_abelian(self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of the subgroup generated by squares.
    pub fn squares_subgroup_order(self) -> u32 {
        let n = self.order();
        let mut sub = vec![0u32];
        let gens: Vec<u32> = (0..n).map(|a| self.mul(a, a)).collect();
        loop {
            let mut grown = false;
            for &x in sub.clone().iter() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !sub.contains(&y) {
                        sub.push(y);
                        grown = true;
                    }
                }
            }
            if !grown {
                return sub.len() as u32;
            }
        }
    }

    /// `Some(b)` when the group is `(Z/2)^b`.
    pub fn two_elementary_rank(self) -> Option<u32> {
        let n = self.order();
        if self.is_abelian() && (0..n).all(|a| self.mul(a, a) == 0) {
            Some(n.trailing_zeros())
        } else {
            None
        }
    }
}

/// Q8 as `{±1, ±i, ±j, ±k}`: index `2u + s` stands for `(-1)^s · u` with
/// `u ∈ {1, i, j, k}`.
fn q8_mul(a: u32, b: u32) -> u32 {
    const TABLE: [[(u32, u32); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let (ua, sa) = (a / 2, a % 2);
    let (ub, sb) = (b / 2, b % 2);
    let (u, s) = TABLE[ua as usize][ub as usize];
    2 * u + (sa + sb + s) % 2
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupTag::Trivial => "1",
            GroupTag::Z2 => "Z/2",
            GroupTag::Z3 => "Z/3",
            GroupTag::Z5 => "Z/5",
            GroupTag::Z7 => "Z/7",
            GroupTag::Z11 => "Z/11",
            GroupTag::Q8 => "Q8",
            GroupTag::Z2xZ2 => "Z/2×Z/2",
            GroupTag::Z4 => "Z/4",
        })
    }
}
