//! Irreducible complex characters of small groups.
//!
//! Class-multiplication matrices are diagonalized simultaneously over a
//! prime field `F_p` with `p ≡ 1 (mod exponent)`; the resulting modular
//! characters are lifted to exact cyclotomic values by recovering the
//! eigenvalue multiplicities of each class representative.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ConjugacyClass, FiniteGroup};
use crate::scalars::Cyclotomic;

/// An irreducible character, as values on conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCharacter {
    pub degree: u64,
    /// Value on each class, written in conductor `exponent(G)`.
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    pub characters: Vec<ClassCharacter>,
}

impl CharacterTable {
    /// Value of character `i` at element `g`.
    pub fn value(&self, i: usize, g: usize) -> &Cyclotomic {
        &self.characters[i].values[self.class_of[g]]
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("prime has a primitive root")
}

/// Basis (as columns) of `{ c : M c = 0 }` over `F_p`, `M` given by rows.
fn nullspace_mod(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

/// Computes the character table of `group`.
pub fn character_table(group: &FiniteGroup) -> CharacterTable {
    let classes = group.conjugacy_classes();
    let class_of = group.class_map(&classes);
    let r = classes.len();
    let order = group.order() as u64;
    let exponent = group.exponent() as u64;

    // p ≡ 1 mod exponent and p > |G| (which also exceeds 2·sqrt|G| for |G| > 3)
    let mut p = exponent + 1;
    while !(is_prime(p) && p > order.max(4)) {
        p += exponent;
    }
    let z = pow_mod(primitive_root(p), (p - 1) / exponent, p);

    // c[i][j][k] = #{x in K_i : x^{-1} z_k in K_j}, z_k the class representative
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (k, class) in classes.iter().enumerate() {
        let zk = class.representative;
        for x in group.elements() {
            let y = group.mul(group.inv(x), zk);
            c[class_of[x]][class_of[y]][k] += 1;
        }
    }

    // split F_p^r into common eigenspaces of the matrices A_i = (c[i][j][k])_{jk}
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut e = vec![0u64; r];
            e[i] = 1;
            e
        })
        .collect()];
    for i in 1..r {
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // (A_i - λ) B, as an r × m system in the coordinates on B
            let image: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| (0..r).map(|j| (0..r).map(|k| c[i][j][k] % p * v[k] % p).sum::<u64>() % p).collect())
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                let rows: Vec<Vec<u64>> = (0..r)
                    .map(|j| basis.iter().zip(&image).map(|(v, av)| (av[j] + p - lambda * v[j] % p) % p).collect())
                    .collect();
                let kernel = nullspace_mod(&rows, basis.len(), p);
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                let sub: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|coef| {
                        (0..r).map(|j| basis.iter().zip(coef).map(|(v, &cf)| v[j] * cf % p).sum::<u64>() % p).collect()
                    })
                    .collect();
                next.push(sub);
                if found == basis.len() {
                    break;
                }
            }
            assert_eq!(found, basis.len(), "class matrices are diagonalizable modulo p");
        }
        spaces = next;
    }
    assert!(spaces.iter().all(|s| s.len() == 1), "common eigenspaces are one-dimensional");

    let inverse_class: Vec<usize> = classes.iter().map(|cl| class_of[group.inv(cl.representative)]).collect();
    let sizes: Vec<u64> = classes.iter().map(|cl| cl.elements.len() as u64).collect();
    let conductor = exponent;

    let mut characters: Vec<ClassCharacter> = spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            let norm = inv_mod(v[0], p);
            let omega: Vec<u64> = v.iter().map(|x| x * norm % p).collect();
            // degree² = |G| / Σ ω_i ω_{i*} / |K_i|
            let s: u64 = (0..r).map(|i| omega[i] * omega[inverse_class[i]] % p * inv_mod(sizes[i] % p, p) % p).sum::<u64>() % p;
            let target = order % p * inv_mod(s, p) % p;
            let degree = (1..=order).take_while(|f| f * f <= order).find(|f| f * f % p == target).expect("degree exists");
            let modular: Vec<u64> = (0..r).map(|i| omega[i] * degree % p * inv_mod(sizes[i] % p, p) % p).collect();
            let values = (0..r)
                .map(|i| {
                    let g = classes[i].representative;
                    let o = group.element_order(g) as u64;
                    let zo = pow_mod(z, exponent / o, p);
                    let mut raw = vec![BigRational::zero(); conductor as usize];
                    for k in 0..o {
                        let mut m = 0u64;
                        for j in 0..o {
                            let gj = group.pow(g, j as i64);
                            let root = pow_mod(zo, (o - (j * k) % o) % o, p);
                            m = (m + modular[class_of[gj]] * root) % p;
                        }
                        m = m * inv_mod(o % p, p) % p;
                        assert!(m <= degree, "eigenvalue multiplicity lifts to a small integer");
                        raw[(k * (exponent / o)) as usize] += BigRational::from_integer(BigInt::from(m));
                    }
                    Cyclotomic::reduce(conductor, &raw)
                })
                .collect();
            ClassCharacter { degree, values }
        })
        .collect();

    // trivial first, then by degree, then by values
    characters.sort_by_key(|ch| {
        let trivial = ch.degree == 1 && ch.values.iter().all(Cyclotomic::is_one);
        (!trivial, ch.degree, format!("{:?}", ch.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
    });
    CharacterTable { classes, class_of, characters }
}
