use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::polyring::{Monomial, MonomialOrder};

/// How module terms `m * e_i` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleOrderKind {
    /// Component first (lower index is larger), then the monomial order.
    PositionOverTerm,
    /// Shifted degree first, then the monomial order, then the component.
    TermOverPosition,
    /// Components below `ambient` dominate everything else (position over
    /// term among themselves); the remaining components are compared term
    /// over position. Used to read off syzygies.
    Elimination { ambient: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub kind: ModuleOrderKind,
    pub shifts: Vec<i64>,
}

impl ModuleOrder {
    pub fn new(monomial: MonomialOrder, kind: ModuleOrderKind, shifts: Vec<i64>) -> ModuleOrder {
        ModuleOrder {
            monomial,
            kind,
            shifts,
        }
    }

    /// The order on `S` itself, viewed as a rank-one module.
    pub fn ring(monomial: MonomialOrder) -> ModuleOrder {
        Self::new(monomial, ModuleOrderKind::PositionOverTerm, vec![0])
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    #[inline]
    pub fn weighted_degree(&self, m: &Monomial, comp: u32) -> i64 {
        m.degree() as i64 + self.shifts[comp as usize]
    }

    #[inline]
    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        match self.kind {
            ModuleOrderKind::PositionOverTerm => b
                .1
                .cmp(&a.1)
                .then_with(|| self.monomial.cmp(a.0, b.0)),
            ModuleOrderKind::TermOverPosition => self.top(a, b),
            ModuleOrderKind::Elimination { ambient } => {
                let amb = ambient as u32;
                match (a.1 < amb, b.1 < amb) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (true, true) => b.1.cmp(&a.1).then_with(|| self.monomial.cmp(a.0, b.0)),
                    (false, false) => self.top(a, b),
                }
            }
        }
    }

    #[inline]
    fn top(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        self.weighted_degree(a.0, a.1)
            .cmp(&self.weighted_degree(b.0, b.1))
            .then_with(|| self.monomial.cmp(a.0, b.0))
            .then_with(|| b.1.cmp(&a.1))
    }
}
