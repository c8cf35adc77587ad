//! Finite groups as full Cayley tables.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::scalars::RootOfUnity;

pub mod chartable;

/// Default cap on materialized group orders.
pub const DEFAULT_ORDER_CAP: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cayley table is empty or not square")]
    NotSquare,
    #[error("cayley table entry {value} at ({row}, {col}) is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("cayley table has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group order exceeds the cap of {cap}")]
    TooLarge { cap: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("values do not define a homomorphism: failure at ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("expected {expected} generator values, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("element index {0} is out of range")]
    BadElement(usize),
}

/// A finite group given by its multiplication table. Elements are the
/// indices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("names", &self.names).finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table (row `a`, column `b` holds `a·b`).
    pub fn from_cayley(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotSquare);
        }
        for (row, r) in table.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::OutOfRange { row, col, value });
                }
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] == x && flat[x * n + e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = vec![0; n];
        for (a, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&b| flat[a * n + b] == identity && flat[b * n + a] == identity)
                .ok_or(GroupError::NoInverse(a))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            _ => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup { order: n, table: flat, identity, inverses, names })
    }

    /// Table already known to be a group; only used by internal constructions.
    fn from_trusted(table: Vec<usize>, identity: usize, names: Vec<String>) -> Self {
        let n = names.len();
        let mut inverses = vec![0; n];
        for (a, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n).find(|&b| table[a * n + b] == identity).expect("group element has an inverse");
        }
        FiniteGroup { order: n, table, identity, inverses, names }
    }

    /// `Z_n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FiniteGroup::from_trusted(table, 0, (0..n).map(|k| k.to_string()).collect())
    }

    /// Direct product with lexicographic element order: `(a, b) ↦ a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                table[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        let names = (0..n).map(|x| format!("({},{})", a.names[x / nb], b.names[x % nb])).collect();
        FiniteGroup::from_trusted(table, a.identity * nb + b.identity, names)
    }

    /// Closure of permutation generators on `{0, …, degree-1}`. Elements
    /// are numbered in order of discovery (breadth first, generators in
    /// the given order); the product `p·q` applies `p` first.
    pub fn from_generators(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Ok(FiniteGroup::from_trusted(vec![0], 0, vec!["()".to_string()]));
        }
        for (index, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(GroupError::NotAPermutation { index, degree });
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(GroupError::NotAPermutation { index, degree });
                }
                seen[x] = true;
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&i| q[i]).collect() };
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let x = compose(&elements[i], g);
                if !index.contains_key(&x) {
                    if elements.len() >= cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(FiniteGroup::from_trusted(table, 0, names))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `h⁻¹ g h`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.commute(a, b)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, |a, b| a.lcm(&b))
    }

    /// Element generating the whole group, if it is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.elements().find(|&g| self.element_order(g) == self.order)
    }

    /// Greedy generating set: scan elements in index order and keep those
    /// not already in the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        for g in self.elements() {
            if inside[g] {
                continue;
            }
            gens.push(g);
            let mut members: Vec<usize> = self.elements().filter(|&x| inside[x]).collect();
            let mut i = 0;
            while i < members.len() {
                for &s in &gens {
                    let y = self.mul(members[i], s);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// Conjugacy classes, each with its least element index as representative,
    /// ordered by representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for g in self.elements() {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut elements: Vec<usize> = self.elements().map(|h| self.conjugate(g, h)).collect();
            elements.sort_unstable();
            elements.dedup();
            for &x in &elements {
                class_of[x] = classes.len();
            }
            classes.push(ConjugacyClass { representative: g, elements });
        }
        classes
    }

    /// Index of the class containing each element.
    pub fn class_map(&self, classes: &[ConjugacyClass]) -> Vec<usize> {
        let mut map = vec![0; self.order];
        for (i, c) in classes.iter().enumerate() {
            for &x in &c.elements {
                map[x] = i;
            }
        }
        map
    }

    /// `{h : hg = gh}` as a group in its own right, elements in increasing
    /// index order of the ambient group.
    pub fn centralizer(&self, g: usize) -> Subgroup {
        let members: Vec<usize> = self.elements().filter(|&h| self.commute(g, h)).collect();
        self.subgroup(members)
    }

    fn subgroup(&self, members: Vec<usize>) -> Subgroup {
        let local: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let m = members.len();
        let mut table = vec![0; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * m + j] = local[&self.mul(a, b)];
            }
        }
        let names = members.iter().map(|&x| self.names[x].clone()).collect();
        let group = FiniteGroup::from_trusted(table, local[&self.identity], names);
        Subgroup { group: Arc::new(group), embedding: members }
    }

    /// All homomorphisms to the roots of unity, written in order
    /// `exponent(G)`. Enumerated by their values on [`FiniteGroup::generators`],
    /// lexicographically, so the trivial character comes first.
    pub fn linear_characters(self: &Arc<Self>) -> Vec<GroupHom> {
        let gens = self.generators();
        let exp = self.exponent() as u64;
        let orders: Vec<usize> = gens.iter().map(|&g| self.element_order(g)).collect();
        let mut out = Vec::new();
        let mut digits = vec![0usize; gens.len()];
        loop {
            let values: Vec<RootOfUnity> = digits
                .iter()
                .zip(&orders)
                .map(|(&k, &o)| RootOfUnity::new(exp, (k as u64 * (exp / o as u64)) as i64))
                .collect();
            if let Ok(h) = GroupHom::from_generator_values(self.clone(), &gens, &values) {
                out.push(h);
            }
            // odometer, last generator varies fastest
            let mut i = gens.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < orders[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// The character group of an abelian group.
    pub fn character_group(self: &Arc<Self>) -> Result<Vec<GroupHom>, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        Ok(self.linear_characters())
    }

    /// Invariant factors `d_1 | d_2 | …` of an abelian group, computed from
    /// the number of solutions of `x^{p^k} = e` for each prime `p`.
    pub fn invariant_factors(&self) -> Result<Vec<u64>, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let mut n = self.order as u64;
        let mut primes = Vec::new();
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                primes.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        // per prime: partition of exponents, largest first
        let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &p in &primes {
            let mut logs = vec![0u32];
            let mut k = 1u32;
            loop {
                let pk = p.pow(k) as i64;
                let count = self.elements().filter(|&x| self.pow(x, pk) == self.identity).count() as u64;
                let l = count.ilog(p);
                if l == *logs.last().unwrap() {
                    break;
                }
                logs.push(l);
                k += 1;
            }
            // logs[k] - logs[k-1] = number of cyclic factors of order >= p^k
            let mut parts = Vec::new();
            for k in 1..logs.len() {
                let at_least_k = logs[k] - logs[k - 1];
                let at_least_next = if k + 1 < logs.len() { logs[k + 1] - logs[k] } else { 0 };
                for _ in 0..(at_least_k - at_least_next) {
                    parts.push(k as u32);
                }
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.insert(p, parts);
        }
        let len = per_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, parts) in &per_prime {
            for (i, &e) in parts.iter().enumerate() {
                factors[len - 1 - i] *= p.pow(e);
            }
        }
        Ok(factors)
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub elements: Vec<usize>,
}

/// A subgroup materialized as a group, with the inclusion map into the
/// ambient group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Arc<FiniteGroup>,
    pub embedding: Vec<usize>,
}

impl Subgroup {
    /// Local index of an ambient element, if it belongs to the subgroup.
    pub fn local(&self, ambient: usize) -> Option<usize> {
        self.embedding.binary_search(&ambient).ok()
    }
}

/// A homomorphism into the roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    values: Vec<RootOfUnity>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, values: Vec<RootOfUnity>) -> Result<Self, GroupError> {
        if values.len() != source.order() {
            return Err(GroupError::GeneratorCount { expected: source.order(), got: values.len() });
        }
        for a in source.elements() {
            for b in source.elements() {
                if values[source.mul(a, b)] != values[a] * values[b] {
                    return Err(GroupError::NotAHomomorphism(a, b));
                }
            }
        }
        Ok(GroupHom { source, values })
    }

    pub fn trivial(source: Arc<FiniteGroup>) -> Self {
        let values = vec![RootOfUnity::one(); source.order()];
        GroupHom { source, values }
    }

    /// Extends values on generators to the whole group and validates.
    pub fn from_generator_values(
        source: Arc<FiniteGroup>,
        generators: &[usize],
        values: &[RootOfUnity],
    ) -> Result<Self, GroupError> {
        if generators.len() != values.len() {
            return Err(GroupError::GeneratorCount { expected: generators.len(), got: values.len() });
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= source.order()) {
            return Err(GroupError::BadElement(g));
        }
        let mut assigned: Vec<Option<RootOfUnity>> = vec![None; source.order()];
        assigned[source.identity()] = Some(RootOfUnity::one());
        let mut queue = VecDeque::from([source.identity()]);
        while let Some(x) = queue.pop_front() {
            let vx = assigned[x].expect("queued elements are assigned");
            for (&g, &vg) in generators.iter().zip(values) {
                let y = source.mul(x, g);
                match assigned[y] {
                    None => {
                        assigned[y] = Some(vx * vg);
                        queue.push_back(y);
                    }
                    Some(vy) if vy != vx * vg => return Err(GroupError::NotAHomomorphism(x, g)),
                    Some(_) => {}
                }
            }
        }
        if assigned.iter().any(Option::is_none) {
            // generators do not generate; the caller gave an incomplete set
            return Err(GroupError::GeneratorCount { expected: source.generators().len(), got: values.len() });
        }
        GroupHom::new(source, assigned.into_iter().map(Option::unwrap).collect())
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn value(&self, g: usize) -> RootOfUnity {
        self.values[g]
    }

    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(RootOfUnity::is_one)
    }

    /// Pointwise product `self · other^power`.
    pub fn combine(&self, other: &GroupHom, power: i64) -> GroupHom {
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| RootOfUnity::combine(a, b, power)).collect();
        GroupHom { source: self.source.clone(), values }
    }
}
