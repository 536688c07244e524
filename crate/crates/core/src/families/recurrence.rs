//! Recurrences stored as plain integer data, so that a single coefficient can
//! be perturbed and the rest of the crate can be checked for catching it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// One summand `(base + n_coef*n + k_coef*k) * row_n[k + shift]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleTerm {
    pub shift: i64,
    pub base: i64,
    pub n_coef: i64,
    pub k_coef: i64,
}

const fn tt(shift: i64, base: i64, n_coef: i64, k_coef: i64) -> TriangleTerm {
    TriangleTerm {
        shift,
        base,
        n_coef,
        k_coef,
    }
}

/// `divisor * row_{n+1}[k] = Σ_terms coefficient(n, k) * row_n[k + shift]`,
/// with out-of-range entries of `row_n` read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRecurrence {
    pub terms: Vec<TriangleTerm>,
    pub divisor: i64,
}

/// Raised when `divisor` is zero or does not divide the right-hand side
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indivisible {
    pub k: usize,
    pub value: BigInt,
}

impl TriangleRecurrence {
    /// Compute `row_{n+1}` with `len` entries from `row_n`.
    pub fn step(&self, n: usize, prev: &[BigInt], len: usize) -> Result<Vec<BigInt>, Indivisible> {
        let n = n as i64;
        let divisor = BigInt::from(self.divisor);
        (0..len)
            .map(|k| {
                let mut acc = BigInt::zero();
                for t in &self.terms {
                    let idx = k as i64 + t.shift;
                    if idx < 0 || idx as usize >= prev.len() {
                        continue;
                    }
                    let c = t.base + t.n_coef * n + t.k_coef * k as i64;
                    if c != 0 {
                        acc += &prev[idx as usize] * c;
                    }
                }
                if divisor.is_zero() {
                    return Err(Indivisible { k, value: acc });
                }
                let (q, r) = acc.div_rem(&divisor);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Indivisible { k, value: acc })
                }
            })
            .collect()
    }

    fn slots_mut(&mut self) -> Vec<&mut i64> {
        let mut out: Vec<&mut i64> = Vec::new();
        for t in &mut self.terms {
            out.push(&mut t.base);
            out.push(&mut t.n_coef);
            out.push(&mut t.k_coef);
        }
        out.push(&mut self.divisor);
        out
    }
}

/// `f_{n+1} = mult_n(x) f_n + deriv_n(x) f_n'`, where each multiplier is
/// `Σ_j (a_j + b_j n) x^j` stored as `[(a_j, b_j)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffRecurrence {
    pub mult: Vec<(i64, i64)>,
    pub deriv: Vec<(i64, i64)>,
}

impl DiffRecurrence {
    pub fn step(&self, n: usize, f: &[BigInt]) -> Vec<BigInt> {
        let n = n as i64;
        let df: Vec<BigInt> = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j)
            .collect();
        let len = (f.len() + self.mult.len()).max(df.len() + self.deriv.len());
        let mut out = vec![BigInt::zero(); len];
        let mut acc = |mult: &[(i64, i64)], g: &[BigInt]| {
            for (j, &(a, b)) in mult.iter().enumerate() {
                let c = a + b * n;
                if c == 0 {
                    continue;
                }
                for (i, gi) in g.iter().enumerate() {
                    out[i + j] += gi * c;
                }
            }
        };
        acc(&self.mult, f);
        acc(&self.deriv, &df);
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    fn slots_mut(&mut self) -> Vec<&mut i64> {
        self.mult
            .iter_mut()
            .chain(self.deriv.iter_mut())
            .flat_map(|(a, b)| [a, b])
            .collect()
    }
}

/// Names of the recurrences the crate generates families from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecurrenceId {
    AltA,
    AltB,
    AltBDiff,
    Xi,
    XiDiff,
    P,
    Q,
    S,
}

impl RecurrenceId {
    pub const ALL: [RecurrenceId; 8] = [
        RecurrenceId::AltA,
        RecurrenceId::AltB,
        RecurrenceId::AltBDiff,
        RecurrenceId::Xi,
        RecurrenceId::XiDiff,
        RecurrenceId::P,
        RecurrenceId::Q,
        RecurrenceId::S,
    ];
}

impl fmt::Display for RecurrenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecurrenceId::AltA => "altA",
            RecurrenceId::AltB => "altB",
            RecurrenceId::AltBDiff => "altB'",
            RecurrenceId::Xi => "xi",
            RecurrenceId::XiDiff => "xi'",
            RecurrenceId::P => "P",
            RecurrenceId::Q => "Q",
            RecurrenceId::S => "S",
        })
    }
}

/// Perturb one integer coefficient of one recurrence by `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub target: RecurrenceId,
    pub slot: usize,
    pub delta: i64,
}

/// The full set of recurrences used by [`super::Families`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrences {
    pub alt_a: TriangleRecurrence,
    pub alt_b: TriangleRecurrence,
    pub alt_b_diff: DiffRecurrence,
    pub xi: TriangleRecurrence,
    pub xi_diff: DiffRecurrence,
    pub p: DiffRecurrence,
    pub q: DiffRecurrence,
    pub s: DiffRecurrence,
}

impl Default for Recurrences {
    fn default() -> Self {
        Recurrences {
            // 2Â(n+1,k) = (k+1)(Â(n,k+1) + Â(n,k-1)) + (n-k+1)(Â(n,k) + Â(n,k-2))
            alt_a: TriangleRecurrence {
                terms: vec![tt(1, 1, 0, 1), tt(-1, 1, 0, 1), tt(0, 1, 1, -1), tt(-2, 1, 1, -1)],
                divisor: 2,
            },
            // B̂(n+1,k) = (k+1)B̂(n,k+1) + kB̂(n,k-1) + (n-k+1)B̂(n,k) + (n-k+2)B̂(n,k-2)
            alt_b: TriangleRecurrence {
                terms: vec![tt(1, 1, 0, 1), tt(-1, 0, 0, 1), tt(0, 1, 1, -1), tt(-2, 2, 1, -1)],
                divisor: 1,
            },
            // B̂_{n+1} = (1+n+x+nx^2)B̂_n + (1-x)(1+x^2)B̂_n'
            alt_b_diff: DiffRecurrence {
                mult: vec![(1, 1), (1, 0), (0, 1)],
                deriv: vec![(1, 0), (-1, 0), (1, 0), (-1, 0)],
            },
            // ξ(n+1,i) = (1+2n-6i)ξ(n,i) + (n-2i+2)ξ(n,i-1) - 4(i+1)ξ(n,i+1)
            xi: TriangleRecurrence {
                terms: vec![tt(0, 1, 2, -6), tt(-1, 2, 1, -2), tt(1, -4, 0, -4)],
                divisor: 1,
            },
            // ξ_{n+1} = (1+2n+nx)ξ_n - (1+x)(4+2x)ξ_n'
            xi_diff: DiffRecurrence {
                mult: vec![(1, 2), (0, 1)],
                deriv: vec![(-4, 0), (-6, 0), (-2, 0)],
            },
            // P_{n+1} = (1+x^2)P_n'
            p: DiffRecurrence {
                mult: vec![],
                deriv: vec![(1, 0), (0, 0), (1, 0)],
            },
            // Q_{n+1} = xQ_n + (1+x^2)Q_n'
            q: DiffRecurrence {
                mult: vec![(0, 0), (1, 0)],
                deriv: vec![(1, 0), (0, 0), (1, 0)],
            },
            // S_{n+1} = (1+nx)S_n + x(1-2x)S_n'
            s: DiffRecurrence {
                mult: vec![(1, 0), (0, 1)],
                deriv: vec![(0, 0), (1, 0), (-2, 0)],
            },
        }
    }
}

impl Recurrences {
    fn slots_mut(&mut self, id: RecurrenceId) -> Vec<&mut i64> {
        match id {
            RecurrenceId::AltA => self.alt_a.slots_mut(),
            RecurrenceId::AltB => self.alt_b.slots_mut(),
            RecurrenceId::AltBDiff => self.alt_b_diff.slots_mut(),
            RecurrenceId::Xi => self.xi.slots_mut(),
            RecurrenceId::XiDiff => self.xi_diff.slots_mut(),
            RecurrenceId::P => self.p.slots_mut(),
            RecurrenceId::Q => self.q.slots_mut(),
            RecurrenceId::S => self.s.slots_mut(),
        }
    }

    /// Number of perturbable integer coefficients in a recurrence.
    pub fn slot_count(&self, id: RecurrenceId) -> usize {
        self.clone().slots_mut(id).len()
    }

    /// A copy with one coefficient perturbed. Out-of-range slots are ignored.
    pub fn with_fault(&self, fault: Fault) -> Recurrences {
        let mut out = self.clone();
        if let Some(slot) = out.slots_mut(fault.target).into_iter().nth(fault.slot) {
            *slot += fault.delta;
        }
        out
    }
}
