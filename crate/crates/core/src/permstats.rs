//! Brute-force enumeration of the symmetric group and the hyperoctahedral
//! group, with every statistic the rest of the crate is checked against.
//!
//! Words are stored without the leading zero; statistics that look at
//! position 0 read it as a virtual `0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactpoly::{Poly, Var};
use crate::par::{self, ExecMode};

/// Environment variable overriding the enumeration cap.
pub const ENUM_CAP_ENV: &str = "ALTGAMMA_ENUM_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{group} enumeration at n = {n} exceeds the cap n <= {cap}")]
    CapExceeded { group: Group, n: usize, cap: usize },
    #[error("word has a repeated letter {0}")]
    DuplicateLetter(i64),
    #[error("insertion position {pos} is out of range 0..={len}")]
    BadPosition { pos: usize, len: usize },
    #[error("inserted letter must be +-{expected}, got {got}")]
    BadLetter { expected: usize, got: i32 },
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("invalid enumeration cap `{0}`")]
    BadCap(String),
}

/// Which group a statistic lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Symmetric,
    Hyperoctahedral,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Symmetric => "S_n",
            Group::Hyperoctahedral => "S^B_n",
        })
    }
}

/// Largest `n` enumerated for each group. Exceeding it is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap {
    pub signed: usize,
    pub unsigned: usize,
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap {
            signed: 8,
            unsigned: 10,
        }
    }
}

impl EnumCap {
    /// A single number `N` caps signed enumeration at `N` and unsigned
    /// enumeration at `N + 2`, which keeps both groups at a similar size.
    pub fn from_single(n: usize) -> Self {
        EnumCap {
            signed: n,
            unsigned: n + 2,
        }
    }

    /// Default cap, overridden by `ALTGAMMA_ENUM_CAP` when set.
    pub fn from_env() -> Result<Self, PermError> {
        match std::env::var(ENUM_CAP_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map(EnumCap::from_single)
                .map_err(|_| PermError::BadCap(s)),
            Err(_) => Ok(EnumCap::default()),
        }
    }

    pub fn for_group(&self, g: Group) -> usize {
        match g {
            Group::Symmetric => self.unsigned,
            Group::Hyperoctahedral => self.signed,
        }
    }

    pub fn check(&self, g: Group, n: usize) -> Result<(), PermError> {
        let cap = self.for_group(g);
        if n > cap {
            Err(PermError::CapExceeded { group: g, n, cap })
        } else {
            Ok(())
        }
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<i32>);

/// A signed permutation: absolute values form a permutation of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation(Vec<i32>);

fn is_bijection(abs: impl Iterator<Item = u32>, n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    for a in abs {
        let a = a as usize;
        if a == 0 || a > n || seen[a] {
            return false;
        }
        seen[a] = true;
    }
    true
}

impl Permutation {
    pub fn new(word: Vec<i32>) -> Option<Self> {
        let n = word.len();
        (word.iter().all(|&v| v > 0) && is_bijection(word.iter().map(|v| v.unsigned_abs()), n))
            .then_some(Permutation(word))
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn des(&self) -> usize {
        des(&self.0)
    }

    pub fn altdes(&self) -> usize {
        altdes_a(&self.0)
    }

    pub fn lpk(&self) -> usize {
        lpk(&self.0)
    }

    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.0)
    }
}

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Option<Self> {
        let n = word.len();
        is_bijection(word.iter().map(|v| v.unsigned_abs()), n).then_some(SignedPermutation(word))
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn des_b(&self) -> usize {
        des_b(&self.0)
    }

    pub fn altdes_b(&self) -> usize {
        altdes_b(&self.0)
    }

    pub fn altasc_b(&self) -> usize {
        altasc_b(&self.0)
    }

    pub fn altdesb_remmel(&self) -> usize {
        altdesb_remmel(&self.0)
    }

    pub fn is_snake(&self) -> bool {
        is_snake(&self.0)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

// Statistics on raw words. Signed words get the virtual sigma(0) = 0.

pub fn des(w: &[i32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn des_b(w: &[i32]) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for &v in w {
        if prev > v {
            count += 1;
        }
        prev = v;
    }
    count
}

/// Position `j` in `1..n` counts when `j` is odd and `w(j) > w(j+1)`, or
/// `j` is even and `w(j) < w(j+1)`.
pub fn altdes_a(w: &[i32]) -> usize {
    w.windows(2)
        .enumerate()
        .filter(|(i, p)| if (i + 1) % 2 == 1 { p[0] > p[1] } else { p[0] < p[1] })
        .count()
}

/// Position `j` in `0..n` (with `w(0) = 0`) counts when `j` is even and
/// `w(j) < w(j+1)`, or `j` is odd and `w(j) > w(j+1)`.
pub fn altdes_b(w: &[i32]) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for (j, &v) in w.iter().enumerate() {
        if (j % 2 == 0 && prev < v) || (j % 2 == 1 && prev > v) {
            count += 1;
        }
        prev = v;
    }
    count
}

pub fn altasc_b(w: &[i32]) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for (j, &v) in w.iter().enumerate() {
        if (j % 2 == 0 && prev > v) || (j % 2 == 1 && prev < v) {
            count += 1;
        }
        prev = v;
    }
    count
}

/// `altdes_B` minus one when `w(1) > 0`.
pub fn altdesb_remmel(w: &[i32]) -> usize {
    let a = altdes_b(w);
    match w.first() {
        Some(&v) if v > 0 => a - 1,
        _ => a,
    }
}

/// Left peaks `i` in `1..n` with `w(i-1) < w(i) > w(i+1)` and `w(0) = 0`.
pub fn lpk(w: &[i32]) -> usize {
    let mut count = 0;
    for i in 0..w.len().saturating_sub(1) {
        let left = if i == 0 { 0 } else { w[i - 1] };
        if left < w[i] && w[i] > w[i + 1] {
            count += 1;
        }
    }
    count
}

/// `0 < w(1) > w(2) < w(3) > ...`
pub fn is_snake(w: &[i32]) -> bool {
    altdes_b(w) == w.len()
}

/// Down-up: `w(1) > w(2) < w(3) > ...`
pub fn is_alternating(w: &[i32]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

/// Named statistics exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Des,
    DesB,
    Altdes,
    AltdesB,
    AltascB,
    AltdesbRemmel,
    Lpk,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Des,
        Statistic::DesB,
        Statistic::Altdes,
        Statistic::AltdesB,
        Statistic::AltascB,
        Statistic::AltdesbRemmel,
        Statistic::Lpk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Des => "des",
            Statistic::DesB => "desB",
            Statistic::Altdes => "altdes",
            Statistic::AltdesB => "altdesB",
            Statistic::AltascB => "altascB",
            Statistic::AltdesbRemmel => "altdesbRemmel",
            Statistic::Lpk => "lpk",
        }
    }

    pub fn group(self) -> Group {
        match self {
            Statistic::Des | Statistic::Altdes | Statistic::Lpk => Group::Symmetric,
            _ => Group::Hyperoctahedral,
        }
    }

    pub fn eval(self, w: &[i32]) -> usize {
        match self {
            Statistic::Des => des(w),
            Statistic::DesB => des_b(w),
            Statistic::Altdes => altdes_a(w),
            Statistic::AltdesB => altdes_b(w),
            Statistic::AltascB => altasc_b(w),
            Statistic::AltdesbRemmel => altdesb_remmel(w),
            Statistic::Lpk => lpk(w),
        }
    }
}

impl FromStr for Statistic {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, PermError> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| PermError::UnknownStatistic(s.to_string()))
    }
}

/// Named predicates exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Snake,
    Alternating,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Snake => "snake",
            Predicate::Alternating => "alternating",
        }
    }

    pub fn group(self) -> Group {
        match self {
            Predicate::Snake => Group::Hyperoctahedral,
            Predicate::Alternating => Group::Symmetric,
        }
    }

    pub fn eval(self, w: &[i32]) -> bool {
        match self {
            Predicate::Snake => is_snake(w),
            Predicate::Alternating => is_alternating(w),
        }
    }
}

impl FromStr for Predicate {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, PermError> {
        match s {
            "snake" => Ok(Predicate::Snake),
            "alternating" => Ok(Predicate::Alternating),
            _ => Err(PermError::UnknownStatistic(s.to_string())),
        }
    }
}

/// Advance to the next permutation in lexicographic order; false at the end.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All permutations of `[n]` in lexicographic order.
pub fn perms(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur.clone();
        done = !next_permutation(&mut cur);
        Some(Permutation(out))
    })
}

/// All signed permutations of `[n]`, ordered by sign pattern (positive
/// before negative, left to right) and then lexicographically by the
/// underlying permutation.
pub fn signed_perms(n: usize) -> impl Iterator<Item = SignedPermutation> {
    let masks = 1u64 << n;
    (0..masks).flat_map(move |mask| {
        perms(n).map(move |p| {
            let word = p
                .0
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> (n - 1 - i) & 1 == 1 { -v } else { v })
                .collect();
            SignedPermutation(word)
        })
    })
}

/// Visit every word of the group whose first letter is `first`.
fn for_each_with_first<F: FnMut(&[i32])>(group: Group, n: usize, first: i32, mut f: F) {
    let mut rest: Vec<i32> = (1..=n as i32).filter(|&v| v != first.abs()).collect();
    let mut buf = vec![0i32; n];
    buf[0] = first;
    loop {
        match group {
            Group::Symmetric => {
                buf[1..].copy_from_slice(&rest);
                f(&buf);
            }
            Group::Hyperoctahedral => {
                for mask in 0u64..1 << (n - 1) {
                    for (i, &v) in rest.iter().enumerate() {
                        buf[i + 1] = if mask >> i & 1 == 1 { -v } else { v };
                    }
                    f(&buf);
                }
            }
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
}

fn first_letters(group: Group, n: usize) -> Vec<i32> {
    let pos = 1..=n as i32;
    match group {
        Group::Symmetric => pos.collect(),
        Group::Hyperoctahedral => pos.clone().map(|v| -v).chain(pos).collect(),
    }
}

/// Histogram of `bucket(w)` over the whole group, partitioned by first letter.
pub fn histogram<F>(group: Group, n: usize, buckets: usize, mode: ExecMode, bucket: F) -> Vec<u64>
where
    F: Fn(&[i32]) -> usize + Sync + Send,
{
    if n == 0 {
        let mut h = vec![0; buckets];
        h[bucket(&[])] += 1;
        return h;
    }
    par::map_reduce(
        mode,
        first_letters(group, n),
        vec![0u64; buckets],
        |first| {
            let mut h = vec![0u64; buckets];
            for_each_with_first(group, n, first, |w| h[bucket(w)] += 1);
            h
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

fn counts_to_poly(counts: &[u64]) -> Poly {
    let x = Var::new("x");
    let ints: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
    Poly::from_int_coeffs(&x, &ints)
}

/// `Σ x^stat(w)` over the statistic's group, by brute force.
pub fn distribution(stat: Statistic, n: usize, cap: &EnumCap) -> Result<Poly, PermError> {
    distribution_with(stat, n, cap, ExecMode::default())
}

pub fn distribution_with(
    stat: Statistic,
    n: usize,
    cap: &EnumCap,
    mode: ExecMode,
) -> Result<Poly, PermError> {
    cap.check(stat.group(), n)?;
    let counts = histogram(stat.group(), n, n + 1, mode, |w| stat.eval(w));
    Ok(counts_to_poly(&counts))
}

/// Number of group elements satisfying the predicate.
pub fn count(pred: Predicate, n: usize, cap: &EnumCap) -> Result<u64, PermError> {
    cap.check(pred.group(), n)?;
    let h = histogram(pred.group(), n, 2, ExecMode::default(), |w| usize::from(pred.eval(w)));
    Ok(h[1])
}

/// Replace the `i`-th largest letter by the `i`-th smallest, keeping positions.
pub fn complement(word: &[i64]) -> Result<Vec<i64>, PermError> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if let Some(p) = sorted.windows(2).find(|p| p[0] == p[1]) {
        return Err(PermError::DuplicateLetter(p[0]));
    }
    let last = sorted.len().saturating_sub(1);
    Ok(word
        .iter()
        .map(|v| {
            let rank = sorted.binary_search(v).expect("letter present");
            sorted[last - rank]
        })
        .collect())
}

/// Insert `letter` (which must be `+-(len+1)`) right after position `pos`
/// and complement the suffix that follows it. `pos == len` appends.
pub fn insert_complemented(
    sigma: &SignedPermutation,
    pos: usize,
    letter: i32,
) -> Result<SignedPermutation, PermError> {
    let len = sigma.len();
    if pos > len {
        return Err(PermError::BadPosition { pos, len });
    }
    if letter.unsigned_abs() as usize != len + 1 {
        return Err(PermError::BadLetter {
            expected: len + 1,
            got: letter,
        });
    }
    let suffix: Vec<i64> = sigma.0[pos..].iter().map(|&v| i64::from(v)).collect();
    let mut word = Vec::with_capacity(len + 1);
    word.extend_from_slice(&sigma.0[..pos]);
    word.push(letter);
    word.extend(complement(&suffix)?.into_iter().map(|v| v as i32));
    Ok(SignedPermutation(word))
}

/// True iff inserting `+-n` at every position of every element of
/// `S^B_{n-1}` hits each element of `S^B_n` exactly once.
pub fn insertion_bijection_check(n: usize, cap: &EnumCap) -> Result<bool, PermError> {
    if n == 0 {
        return Ok(false);
    }
    cap.check(Group::Hyperoctahedral, n)?;
    let expected = (1..=n).product::<usize>() << n;
    let mut seen = vec![false; expected];
    for sigma in signed_perms(n - 1) {
        for pos in 0..n {
            for letter in [n as i32, -(n as i32)] {
                let tau = insert_complemented(&sigma, pos, letter)?;
                match signed_rank(&tau.0) {
                    Some(r) if !seen[r] => seen[r] = true,
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(seen.into_iter().all(|b| b))
}

/// Index of a signed permutation in `0..2^n n!`: sign bits, then the Lehmer
/// code of the absolute values. `None` if the word is not a signed permutation.
fn signed_rank(w: &[i32]) -> Option<usize> {
    let n = w.len();
    let mut used = vec![false; n + 1];
    let mut rank = 0usize;
    for (i, &v) in w.iter().enumerate() {
        let a = v.unsigned_abs() as usize;
        if a == 0 || a > n || used[a] {
            return None;
        }
        let smaller_unused = (1..a).filter(|&b| !used[b]).count();
        used[a] = true;
        rank = rank * (n - i) + smaller_unused;
    }
    let signs = w.iter().fold(0usize, |acc, &v| (acc << 1) | usize::from(v < 0));
    Some((signs * (1..=n).product::<usize>()) + rank)
}
