//! Dirichlet characters represented structurally.
//!
//! A character mod m is stored as one exponent per cyclic factor of the
//! unit group (Z/m)*: one factor per odd prime power with the smallest
//! primitive root as generator, and the two-generator convention (-1, 5)
//! at the prime 2 for 2^e, e >= 3. Conductors and primitivity are
//! decided componentwise; evaluation goes through per-component discrete
//! log tables and exact root-of-unity angles, materialized to complex
//! doubles only when sums are formed.

use std::sync::Arc;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sieve::{isqrt, PrimeTable};

/// Exact angle of a root of unity, as a fraction of a full turn in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    angle: Ratio<i64>,
}

impl RootOfUnity {
    fn from_angle(angle: Ratio<i64>) -> Self {
        Self { angle: angle - angle.floor() }
    }

    pub fn one() -> Self {
        Self { angle: Ratio::zero() }
    }

    /// Numerator of the angle (turns).
    pub fn numer(&self) -> i64 {
        *self.angle.numer()
    }

    /// Denominator of the angle; the order of the root divides this.
    pub fn denom(&self) -> i64 {
        *self.angle.denom()
    }

    /// Materialize to a complex double. Quarter-turn angles map to the
    /// exact values +-1, +-i.
    pub fn to_complex(self) -> Complex64 {
        match (self.numer(), self.denom()) {
            (0, 1) => Complex64::new(1.0, 0.0),
            (1, 2) => Complex64::new(-1.0, 0.0),
            (1, 4) => Complex64::new(0.0, 1.0),
            (3, 4) => Complex64::new(0.0, -1.0),
            (n, d) => {
                let (s, c) = (std::f64::consts::TAU * n as f64 / d as f64).sin_cos();
                Complex64::new(c, s)
            }
        }
    }
}

/// One cyclic factor of the unit group.
#[derive(Debug)]
struct Axis {
    order: u64,
}

#[derive(Debug)]
enum BlockKind {
    /// Odd p^e: cyclic of order phi(p^e) with the smallest primitive root.
    Odd { generator: u64, dlog: Vec<u32> },
    /// 2^2: cyclic of order 2 generated by -1.
    Four,
    /// 2^e, e >= 3: (-1) x (5) with orders 2 and 2^(e-2).
    TwoPower { order5: u64, dlog: Vec<(u8, u32)> },
}

/// Unit-group data for one prime power p^e dividing the modulus.
#[derive(Debug)]
struct Block {
    prime: u64,
    modulus: u64,
    axis_offset: usize,
    kind: BlockKind,
}

#[derive(Debug)]
struct GroupCore {
    modulus: u64,
    blocks: Vec<Block>,
    axis_orders: Vec<u64>,
    order: u64,
}

/// The full character group mod m, shareable and immutable.
#[derive(Debug, Clone)]
pub struct CharacterGroup {
    core: Arc<GroupCore>,
}

/// A Dirichlet character mod m with cached conductor.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    core: Arc<GroupCore>,
    exponents: Vec<u32>,
    conductor: u64,
}

impl CharacterGroup {
    /// Build the group structure for the given modulus (deterministic
    /// generator choice: smallest primitive root per odd prime power).
    pub fn new(modulus: u64, table: &PrimeTable) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("modulus must be positive".into()));
        }
        if modulus > table.limit() {
            return Err(Error::Range(format!(
                "modulus {modulus} exceeds prime table limit {}",
                table.limit()
            )));
        }
        let mut blocks = Vec::new();
        let mut axis_orders = Vec::new();
        for (p, e) in table.factor(modulus)? {
            let pe = p.pow(e);
            let axis_offset = axis_orders.len();
            if p == 2 {
                match e {
                    1 => continue, // trivial unit group
                    2 => {
                        axis_orders.push(2);
                        blocks.push(Block { prime: 2, modulus: 4, axis_offset, kind: BlockKind::Four });
                    }
                    _ => {
                        let order5 = pe / 4;
                        let mut dlog = vec![(0u8, 0u32); pe as usize];
                        let mut cur = 1u64;
                        for j in 0..order5 {
                            dlog[cur as usize] = (0, j as u32);
                            dlog[(pe - cur) as usize] = (1, j as u32);
                            cur = cur * 5 % pe;
                        }
                        axis_orders.push(2);
                        axis_orders.push(order5);
                        blocks.push(Block {
                            prime: 2,
                            modulus: pe,
                            axis_offset,
                            kind: BlockKind::TwoPower { order5, dlog },
                        });
                    }
                }
            } else {
                let order = pe / p * (p - 1);
                let generator = smallest_primitive_root(p, e, pe, order, table)?;
                let mut dlog = vec![0u32; pe as usize];
                let mut cur = 1u64;
                for i in 0..order {
                    dlog[cur as usize] = i as u32;
                    cur = cur * generator % pe;
                }
                axis_orders.push(order);
                blocks.push(Block {
                    prime: p,
                    modulus: pe,
                    axis_offset,
                    kind: BlockKind::Odd { generator, dlog },
                });
            }
        }
        let order = axis_orders.iter().product();
        Ok(Self { core: Arc::new(GroupCore { modulus, blocks, axis_orders, order }) })
    }

    pub fn modulus(&self) -> u64 {
        self.core.modulus
    }

    /// Group order phi(modulus).
    pub fn order(&self) -> u64 {
        self.core.order
    }

    /// Orders of the cyclic factors, in block order.
    pub fn axis_orders(&self) -> &[u64] {
        &self.core.axis_orders
    }

    /// Build the character with the given exponent tuple.
    pub fn character(&self, exponents: Vec<u32>) -> Result<DirichletCharacter> {
        if exponents.len() != self.core.axis_orders.len() {
            return Err(Error::Domain(format!(
                "expected {} exponents, got {}",
                self.core.axis_orders.len(),
                exponents.len()
            )));
        }
        for (i, (&e, &ord)) in exponents.iter().zip(&self.core.axis_orders).enumerate() {
            if e as u64 >= ord {
                return Err(Error::Domain(format!(
                    "exponent {e} at axis {i} outside [0, {ord})"
                )));
            }
        }
        let conductor = conductor_of(&self.core, &exponents);
        Ok(DirichletCharacter { core: Arc::clone(&self.core), exponents, conductor })
    }

    pub fn principal(&self) -> DirichletCharacter {
        self.character(vec![0; self.core.axis_orders.len()])
            .expect("principal exponents are valid")
    }

    /// All phi(m) characters in odometer order (last axis fastest).
    pub fn characters(&self) -> impl Iterator<Item = DirichletCharacter> + '_ {
        let axes = self.core.axis_orders.clone();
        let mut current: Option<Vec<u32>> = Some(vec![0; axes.len()]);
        std::iter::from_fn(move || {
            let exps = current.take()?;
            let chi = self.character(exps.clone()).expect("odometer exponents are valid");
            let mut next = exps;
            let mut i = next.len();
            loop {
                if i == 0 {
                    current = None;
                    break;
                }
                i -= 1;
                next[i] += 1;
                if (next[i] as u64) < axes[i] {
                    current = Some(next);
                    break;
                }
                next[i] = 0;
            }
            Some(chi)
        })
    }

    /// Characters whose conductor lies in (low, high], each paired with
    /// the squarefree-times-square split of the conductor.
    pub fn chars_with_conductor_in(
        &self,
        low: f64,
        high: f64,
        table: &PrimeTable,
    ) -> Result<Vec<(DirichletCharacter, (u64, u64))>> {
        let mut out = Vec::new();
        for chi in self.characters() {
            let c = chi.conductor() as f64;
            if c > low && c <= high {
                let split = table.squarefree_square_split(chi.conductor())?;
                out.push((chi, split));
            }
        }
        Ok(out)
    }
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.core.modulus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Stable textual label: the exponent tuple joined by '-'.
    pub fn label(&self) -> String {
        if self.exponents.is_empty() {
            "0".to_string()
        } else {
            self.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("-")
        }
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Primitive means conductor equals modulus (the mod-1 character is
    /// primitive by convention).
    pub fn is_primitive(&self) -> bool {
        self.conductor == self.core.modulus
    }

    /// Exact value at n: None encodes 0 (n shares a factor with the
    /// modulus), otherwise the root of unity.
    pub fn eval_exact(&self, n: i64) -> Option<RootOfUnity> {
        let m = self.core.modulus;
        let r = n.rem_euclid(m as i64) as u64;
        if m > 1 && num_integer::gcd(r, m) != 1 {
            return None;
        }
        let mut angle = Ratio::zero();
        for block in &self.core.blocks {
            angle += block_angle(block, &self.exponents, (r % block.modulus) as usize);
        }
        Some(RootOfUnity::from_angle(angle))
    }

    /// Value at n as a complex double (0 when gcd(n, m) > 1).
    pub fn eval(&self, n: i64) -> Complex64 {
        self.eval_exact(n).map_or(Complex64::zero(), RootOfUnity::to_complex)
    }

    /// The primitive character mod conductor inducing this one.
    pub fn primitive_part(&self, table: &PrimeTable) -> Result<DirichletCharacter> {
        let target = CharacterGroup::new(self.conductor, table)?;
        let mut exps = vec![0u32; target.core.axis_orders.len()];
        for tb in &target.core.blocks {
            let sb = self
                .core
                .blocks
                .iter()
                .find(|b| b.prime == tb.prime)
                .ok_or_else(|| Error::Internal("conductor prime missing from modulus".into()))?;
            // Generators of the target block, one per axis.
            let generators: Vec<u64> = match &tb.kind {
                BlockKind::Odd { generator, .. } => vec![*generator],
                BlockKind::Four => vec![3],
                BlockKind::TwoPower { .. } => vec![tb.modulus - 1, 5],
            };
            for (axis, h) in generators.into_iter().enumerate() {
                let idx = tb.axis_offset + axis;
                let ord = target.core.axis_orders[idx] as i64;
                // chi'(h) = chi_p(h): h is coprime to p and congruent to
                // itself mod the conductor component.
                let angle = block_angle(sb, &self.exponents, (h % sb.modulus) as usize);
                let scaled = angle * Ratio::from_integer(ord);
                if !scaled.is_integer() {
                    return Err(Error::Internal(format!(
                        "primitive part angle {angle} incompatible with axis order {ord}"
                    )));
                }
                exps[idx] = scaled.to_integer().rem_euclid(ord) as u32;
            }
        }
        target.character(exps)
    }
}

/// Angle contributed by one block at a residue coprime to its prime.
fn block_angle(block: &Block, exponents: &[u32], residue: usize) -> Ratio<i64> {
    match &block.kind {
        BlockKind::Odd { dlog, .. } => {
            let a = exponents[block.axis_offset] as i64;
            let d = dlog[residue] as i64;
            let ord = (block.modulus / block.prime * (block.prime - 1)) as i64;
            Ratio::new(a * d % ord, ord)
        }
        BlockKind::Four => {
            let a = exponents[block.axis_offset] as i64;
            if residue % 4 == 3 {
                Ratio::new(a, 2)
            } else {
                Ratio::zero()
            }
        }
        BlockKind::TwoPower { order5, dlog } => {
            let a = exponents[block.axis_offset] as i64;
            let b = exponents[block.axis_offset + 1] as i64;
            let (i, j) = dlog[residue];
            let ord5 = *order5 as i64;
            Ratio::new(a * i as i64, 2) + Ratio::new(b * j as i64 % ord5, ord5)
        }
    }
}

/// Conductor from the exponent tuple, componentwise.
fn conductor_of(core: &GroupCore, exponents: &[u32]) -> u64 {
    let mut cond = 1u64;
    for block in &core.blocks {
        cond *= match &block.kind {
            BlockKind::Odd { .. } => {
                let a = exponents[block.axis_offset] as u64;
                if a == 0 {
                    1
                } else {
                    let ord = block.modulus / block.prime * (block.prime - 1);
                    let char_order = ord / num_integer::gcd(a, ord);
                    // p^(v_p(order) + 1)
                    let mut f = block.prime;
                    let mut o = char_order;
                    while o % block.prime == 0 {
                        o /= block.prime;
                        f *= block.prime;
                    }
                    f
                }
            }
            BlockKind::Four => {
                if exponents[block.axis_offset] == 0 {
                    1
                } else {
                    4
                }
            }
            BlockKind::TwoPower { order5, .. } => {
                let a = exponents[block.axis_offset] as u64;
                let b = exponents[block.axis_offset + 1] as u64;
                if b == 0 {
                    if a == 0 {
                        1
                    } else {
                        4
                    }
                } else {
                    // Order of the 5-part is 2^s, s >= 1; conductor 2^(s+2).
                    4 * (order5 / num_integer::gcd(b, *order5))
                }
            }
        };
    }
    cond
}

/// Smallest primitive root mod p^e for odd p, found by testing the
/// prime divisors of phi(p^e).
fn smallest_primitive_root(
    p: u64,
    e: u32,
    pe: u64,
    order: u64,
    table: &PrimeTable,
) -> Result<u64> {
    let mut prime_divs: Vec<u64> = table.factor(p - 1)?.into_iter().map(|(r, _)| r).collect();
    if e >= 2 {
        prime_divs.push(p);
    }
    for g in 2..pe {
        if g % p == 0 {
            continue;
        }
        if prime_divs.iter().all(|&r| pow_mod(g, order / r, pe) != 1) {
            return Ok(g);
        }
    }
    Err(Error::Internal(format!("no primitive root mod {pe}")))
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1u128;
    let m = modulus as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

/// Decomposition certificate for a character mod q^2: conductor
/// C = g*k^2 with g squarefree, cofactor v = q^2/C = g*t^2 and
/// q = g*t*k. Failure of any step is a bug, not bad input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSplit {
    pub g: u64,
    pub k: u64,
    pub t: u64,
    pub v: u64,
}

/// Verify the divisibility chain of a character mod q^2.
pub fn divisibility_chain_check(
    q: u64,
    chi: &DirichletCharacter,
    table: &PrimeTable,
) -> Result<ChainSplit> {
    if chi.modulus() != q * q {
        return Err(Error::Domain(format!(
            "character modulus {} is not q^2 = {}",
            chi.modulus(),
            q * q
        )));
    }
    let c = chi.conductor();
    let (g, k) = table.squarefree_square_split(c)?;
    if (q * q) % c != 0 {
        return Err(Error::Internal(format!("conductor {c} does not divide q^2 = {}", q * q)));
    }
    let v = q * q / c;
    if v % g != 0 {
        return Err(Error::Internal(format!("cofactor v = {v} not divisible by g = {g}")));
    }
    let t_sq = v / g;
    let t = isqrt(t_sq);
    if t * t != t_sq {
        return Err(Error::Internal(format!("v/g = {t_sq} is not a perfect square")));
    }
    if g * t * k != q {
        return Err(Error::Internal(format!(
            "chain broken: g*t*k = {} != q = {q}",
            g * t * k
        )));
    }
    Ok(ChainSplit { g, k, t, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn table() -> PrimeTable {
        PrimeTable::build(10_000).unwrap()
    }

    #[test]
    fn group_sizes() {
        let t = table();
        assert_eq!(CharacterGroup::new(1, &t).unwrap().order(), 1);
        assert_eq!(CharacterGroup::new(8, &t).unwrap().order(), 4);
        assert_eq!(CharacterGroup::new(45, &t).unwrap().order(), 24);
        for m in 1..=60u64 {
            let g = CharacterGroup::new(m, &t).unwrap();
            assert_eq!(g.order(), t.euler_phi(m).unwrap(), "m={m}");
            assert_eq!(g.characters().count() as u64, g.order());
        }
    }

    #[test]
    fn principal_character_values() {
        let t = table();
        let g = CharacterGroup::new(5, &t).unwrap();
        let chi0 = g.principal();
        assert_eq!(chi0.eval(3), Complex64::new(1.0, 0.0));
        assert_eq!(chi0.conductor(), 1);
        // Any character mod 6 vanishes at 3.
        let g6 = CharacterGroup::new(6, &t).unwrap();
        for chi in g6.characters() {
            assert_eq!(chi.eval(3), Complex64::zero());
        }
    }

    #[test]
    fn order_four_character_mod_5() {
        let t = table();
        let g = CharacterGroup::new(5, &t).unwrap();
        // 2 is the smallest primitive root mod 5; the character with
        // exponent 1 sends 2 to i.
        let chi = g.character(vec![1]).unwrap();
        assert_eq!(chi.eval(2), Complex64::new(0.0, 1.0));
        // 4 = 2^2 maps to i^2 = -1.
        assert_eq!(chi.eval(4), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn multiplicativity() {
        let t = table();
        for m in [5u64, 8, 9, 12, 16, 45] {
            let g = CharacterGroup::new(m, &t).unwrap();
            for chi in g.characters() {
                for a in 0..m as i64 {
                    for b in 0..m as i64 {
                        let lhs = chi.eval(a * b);
                        let rhs = chi.eval(a) * chi.eval(b);
                        assert!(
                            (lhs - rhs).norm() < 1e-12,
                            "m={m} chi={} a={a} b={b}",
                            chi.label()
                        );
                    }
                }
            }
        }
    }

    /// Brute-force conductor: smallest divisor f of m such that chi is
    /// trivial on the units congruent to 1 mod f.
    fn conductor_brute(chi: &DirichletCharacter, t: &PrimeTable) -> u64 {
        let m = chi.modulus();
        for f in t.divisors(m).unwrap() {
            let mut induced = true;
            for a in 1..=m {
                if num_integer::gcd(a, m) == 1 && a % f == 1 % f {
                    let v = chi.eval(a as i64);
                    if (v - Complex64::new(1.0, 0.0)).norm() > 1e-9 {
                        induced = false;
                        break;
                    }
                }
            }
            if induced {
                return f;
            }
        }
        m
    }

    #[test]
    fn conductor_matches_brute_force_small() {
        let t = table();
        for m in 1..=60u64 {
            let g = CharacterGroup::new(m, &t).unwrap();
            for chi in g.characters() {
                assert_eq!(
                    chi.conductor(),
                    conductor_brute(&chi, &t),
                    "m={m} chi={}",
                    chi.label()
                );
            }
        }
    }

    #[test]
    fn conductor_examples() {
        let t = table();
        // Principal mod 12 has conductor 1.
        let g12 = CharacterGroup::new(12, &t).unwrap();
        assert_eq!(g12.principal().conductor(), 1);
        // The character mod 8 induced from the nontrivial one mod 4:
        // exponents (1 on -1, 0 on 5).
        let g8 = CharacterGroup::new(8, &t).unwrap();
        let chi = g8.character(vec![1, 0]).unwrap();
        assert_eq!(chi.conductor(), 4);
        // Characters mod 9 of full order 6 are primitive.
        let g9 = CharacterGroup::new(9, &t).unwrap();
        let chi = g9.character(vec![1]).unwrap();
        assert_eq!(chi.conductor(), 9);
    }

    #[test]
    fn conductor_table_mod_9() {
        let t = table();
        let g = CharacterGroup::new(9, &t).unwrap();
        let mut conductors: Vec<u64> = g.characters().map(|c| c.conductor()).collect();
        conductors.sort_unstable();
        assert_eq!(conductors, vec![1, 3, 9, 9, 9, 9]);
    }

    #[test]
    fn primitivity_flags() {
        let t = table();
        let g1 = CharacterGroup::new(1, &t).unwrap();
        assert!(g1.principal().is_primitive());
        let g3 = CharacterGroup::new(3, &t).unwrap();
        assert!(!g3.principal().is_primitive());
        assert!(g3.character(vec![1]).unwrap().is_primitive());
    }

    #[test]
    fn primitive_part_induction_identity() {
        let t = table();
        for m in [8u64, 9, 12, 16, 24, 36, 40, 45, 48] {
            let g = CharacterGroup::new(m, &t).unwrap();
            for chi in g.characters() {
                let prim = chi.primitive_part(&t).unwrap();
                assert_eq!(prim.modulus(), chi.conductor());
                assert!(prim.is_primitive(), "m={m} chi={}", chi.label());
                for n in 0..(2 * m) as i64 {
                    let full = chi.eval(n);
                    let induced = if num_integer::gcd(n.rem_euclid(m as i64) as u64, m) == 1 {
                        prim.eval(n)
                    } else {
                        Complex64::zero()
                    };
                    assert!(
                        (full - induced).norm() < 1e-12,
                        "m={m} chi={} n={n}",
                        chi.label()
                    );
                }
            }
        }
    }

    #[test]
    fn primitive_part_fixes_primitive_characters() {
        let t = table();
        let g = CharacterGroup::new(9, &t).unwrap();
        let chi = g.character(vec![1]).unwrap();
        let prim = chi.primitive_part(&t).unwrap();
        assert_eq!(prim.modulus(), 9);
        assert_eq!(prim.exponents(), chi.exponents());
    }

    #[test]
    fn conductor_window_selection() {
        let t = table();
        let g9 = CharacterGroup::new(9, &t).unwrap();
        let sel = g9.chars_with_conductor_in(1.0, 3.0, &t).unwrap();
        assert_eq!(sel.len(), 1);
        assert_eq!(sel[0].0.conductor(), 3);
        assert_eq!(sel[0].1, (3, 1));

        let g4 = CharacterGroup::new(4, &t).unwrap();
        assert!(g4.chars_with_conductor_in(4.0, 8.0, &t).unwrap().is_empty());

        let g1 = CharacterGroup::new(1, &t).unwrap();
        let sel = g1.chars_with_conductor_in(0.0, 1.0, &t).unwrap();
        assert_eq!(sel.len(), 1);
    }

    #[test]
    fn dyadic_conductor_windows_cover_group() {
        let t = table();
        for q in [2u64, 3, 6, 10] {
            let g = CharacterGroup::new(q * q, &t).unwrap();
            let mut counted = 0usize;
            let mut low = 0.5f64;
            while low <= (q * q) as f64 {
                counted += g.chars_with_conductor_in(low, 2.0 * low, &t).unwrap().len();
                low *= 2.0;
            }
            assert_eq!(counted as u64, g.order(), "q={q}");
        }
    }

    #[test]
    fn chain_split_examples() {
        let t = table();
        // q = 6: find a character of conductor 12 mod 36.
        let g36 = CharacterGroup::new(36, &t).unwrap();
        let chi12 = g36.characters().find(|c| c.conductor() == 12).expect("conductor 12 exists");
        let split = divisibility_chain_check(6, &chi12, &t).unwrap();
        assert_eq!(split, ChainSplit { g: 3, k: 2, t: 1, v: 3 });

        // q = 2, principal: C = 1.
        let g4 = CharacterGroup::new(4, &t).unwrap();
        let split = divisibility_chain_check(2, &g4.principal(), &t).unwrap();
        assert_eq!(split, ChainSplit { g: 1, k: 1, t: 2, v: 4 });

        // q = p prime, primitive chi mod p^2: C = p^2.
        let g25 = CharacterGroup::new(25, &t).unwrap();
        let chi = g25.characters().find(|c| c.is_primitive()).unwrap();
        let split = divisibility_chain_check(5, &chi, &t).unwrap();
        assert_eq!(split, ChainSplit { g: 1, k: 5, t: 1, v: 1 });
    }

    #[test]
    fn chain_never_fails_small() {
        let t = table();
        for q in 1..=40u64 {
            let g = CharacterGroup::new(q * q, &t).unwrap();
            for chi in g.characters() {
                divisibility_chain_check(q, &chi, &t).unwrap();
            }
        }
    }

    #[test]
    fn orthogonality_small() {
        let t = table();
        for m in [5u64, 8, 9, 12] {
            let g = CharacterGroup::new(m, &t).unwrap();
            // c_n = n + i on [1, m].
            let c: Vec<Complex64> =
                (1..=m).map(|n| Complex64::new(n as f64, 1.0)).collect();
            let mut lhs = 0.0;
            for chi in g.characters() {
                let s: Complex64 =
                    (1..=m).map(|n| c[(n - 1) as usize] * chi.eval(n as i64)).sum();
                lhs += s.norm_sqr();
            }
            let mut rhs = Complex64::zero();
            for n1 in 1..=m {
                for n2 in 1..=m {
                    if n1 % m == n2 % m
                        && num_integer::gcd(n1, m) == 1
                        && num_integer::gcd(n2, m) == 1
                    {
                        rhs += c[(n1 - 1) as usize] * c[(n2 - 1) as usize].conj();
                    }
                }
            }
            let rhs = g.order() as f64 * rhs.re;
            assert!((lhs - rhs).abs() < 1e-9 * rhs.abs().max(1.0), "m={m}");
        }
    }
}
