//! Exact character tables and the character-theoretic tools built on them.

pub mod class_function;
pub mod clifford;
pub mod cyclotomic;
pub mod dixon;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use class_function::{
    class_fusion, conjugate, induce, inner_product, linear_combination, restrict, ClassFunction,
};
pub use clifford::{
    abelian_characters, characters_of_cyclic_extension,
    characters_of_cyclic_extension_with_sources, clifford_constituents, clifford_constituents_with,
    inertia_group, InertiaAction,
};
pub use cyclotomic::{Cyclotomic, Rational};
pub use dixon::{dixon_prime, DEFAULT_PRIME_BOUND};

use crate::arith::{euler_phi, gcd, units};
use crate::classes::ConjugacyClassTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use cyclotomic::{hermitian_sum, rational_to_string};

/// The irreducible characters of a group, sorted by degree with the trivial
/// character first, then by value vector in decreasing canonical order.
pub struct CharacterTable {
    group: PermGroup,
    classes: Arc<ConjugacyClassTable>,
    prime: u64,
    characters: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassTable {
        &self.classes
    }

    /// Conductor of all values (the group exponent).
    pub fn exponent(&self) -> u64 {
        self.classes.exponent()
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.characters[i]
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.characters
            .iter()
            .map(|c| c.degree_integer().expect("character degrees are integers"))
            .collect()
    }

    pub fn index_of(&self, chi: &ClassFunction) -> Option<usize> {
        self.characters.iter().position(|c| c == chi)
    }

    /// Row permutation induced by the Galois automorphism `ζ ↦ ζ^k`.
    pub fn galois_permutation(&self, k: i64) -> Result<Vec<usize>> {
        let index: HashMap<&[Cyclotomic], usize> = self
            .characters
            .iter()
            .enumerate()
            .map(|(i, c)| (c.values(), i))
            .collect();
        self.characters
            .iter()
            .map(|c| {
                let image = galois_apply(k, c)?;
                index.get(image.values()).copied().ok_or_else(|| {
                    Error::SelfCheck("Galois image is not a row of the table".into())
                })
            })
            .collect()
    }

    /// Checks both orthogonality relations exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let e = self.exponent();
        let order = class_function::order_i64(self.group.order());
        let sizes: Vec<Rational> = self
            .classes
            .classes()
            .iter()
            .map(|c| Rational::from_integer(c.size as i64))
            .collect();
        for (i, a) in self.characters.iter().enumerate() {
            for (j, b) in self.characters.iter().enumerate().skip(i) {
                let s = hermitian_sum(
                    e,
                    sizes
                        .iter()
                        .zip(a.values().iter().zip(b.values()))
                        .map(|(&h, (x, y))| (h, x, y)),
                );
                let expected = if i == j { order } else { 0 };
                if s != Cyclotomic::from_integer(e, expected) {
                    return Err(Error::SelfCheck(format!(
                        "rows {i} and {j} have inner product {s} (times |G|)"
                    )));
                }
            }
        }
        let r = self.classes.len();
        for c in 0..r {
            for d in c..r {
                let s = hermitian_sum(
                    e,
                    self.characters
                        .iter()
                        .map(|chi| (Rational::one(), chi.value(c), chi.value(d))),
                );
                let expected = if c == d {
                    class_function::order_i64(self.classes.centralizer_order(c))
                } else {
                    0
                };
                if s != Cyclotomic::from_integer(e, expected) {
                    return Err(Error::SelfCheck(format!(
                        "columns {c} and {d} have product {s}"
                    )));
                }
            }
        }
        let total: i64 = self.degrees().iter().map(|d| d * d).sum();
        if total != order {
            return Err(Error::SelfCheck(format!("squared degrees sum to {total}")));
        }
        Ok(())
    }

    /// Conductor, class labels and rows as power-basis coefficient vectors
    /// (rationals written as `"p"` or `"p/q"`).
    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .classes()
            .iter()
            .map(|c| {
                json!({
                    "order": c.element_order,
                    "size": c.size,
                    "representative": c.representative.to_string(),
                })
            })
            .collect();
        let rows: Vec<Value> = self
            .characters
            .iter()
            .map(|chi| {
                Value::Array(
                    chi.values()
                        .iter()
                        .map(|v| {
                            Value::Array(
                                v.coefficients()
                                    .iter()
                                    .map(|q| Value::String(rational_to_string(q)))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        let display: Vec<Value> = self
            .characters
            .iter()
            .map(|chi| {
                Value::Array(
                    chi.values()
                        .iter()
                        .map(|v| Value::String(v.to_string()))
                        .collect(),
                )
            })
            .collect();
        json!({
            "conductor": self.exponent(),
            "order": self.group.order() as u64,
            "prime": self.prime,
            "classes": classes,
            "rows": rows,
            "display": display,
        })
    }
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.group.order())
            .field("degrees", &self.degrees())
            .finish()
    }
}

/// Computes the table from scratch with the given prime search bound.
pub fn character_table_with_bound(group: &PermGroup, bound: u64) -> Result<CharacterTable> {
    let classes = group.classes()?;
    let (prime, rows) = dixon::irreducible_values(group, bound)?;
    let mut characters: Vec<ClassFunction> = rows
        .into_iter()
        .map(|values| ClassFunction::from_parts(group, values))
        .collect();
    characters.sort_by(|a, b| {
        let key = |c: &ClassFunction| (c.degree().clone(), !c.is_trivial());
        key(a).cmp(&key(b)).then_with(|| b.values().cmp(a.values()))
    });
    let table = CharacterTable {
        group: group.clone(),
        classes,
        prime,
        characters,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// The character table, computed once per generator list and cached.
pub fn character_table(group: &PermGroup) -> Result<Arc<CharacterTable>> {
    type Cache = Mutex<HashMap<Vec<Vec<u32>>, Arc<CharacterTable>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = group.canonical_key();
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(character_table_with_bound(group, DEFAULT_PRIME_BOUND)?);
    Ok(cache
        .lock()
        .expect("table cache poisoned")
        .entry(key)
        .or_insert(table)
        .clone())
}

/// `χ^σ(g) = χ(g^k)` for a unit `k` modulo the exponent.
pub fn galois_apply(k: i64, chi: &ClassFunction) -> Result<ClassFunction> {
    let e = chi.conductor();
    if gcd(k.rem_euclid(e as i64) as u64, e) != 1 {
        return Err(Error::NotUnit { k, modulus: e });
    }
    let table = chi.group().classes()?;
    let map = table.power_map(k);
    Ok(ClassFunction::from_parts(
        chi.group(),
        map.iter().map(|&c| chi.value(c).clone()).collect(),
    ))
}

/// Field of values of a character, described through its Galois stabilizer.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FieldOfValues {
    pub degree: u64,
    pub is_real: bool,
    pub is_imaginary_quadratic: bool,
    /// Units `k` modulo the exponent with `χ^{σ_k} = χ`.
    pub stabilizer: Vec<u64>,
}

pub fn field_of_values(chi: &ClassFunction) -> Result<FieldOfValues> {
    let e = chi.conductor();
    let table = chi.group().classes()?;
    let stabilizer: Vec<u64> = units(e)
        .into_iter()
        .filter(|&k| {
            table
                .power_map(k as i64)
                .iter()
                .enumerate()
                .all(|(c, &d)| chi.value(c) == chi.value(d))
        })
        .collect();
    let degree = euler_phi(e) / stabilizer.len() as u64;
    let is_real = e <= 2 || stabilizer.contains(&(e - 1));
    Ok(FieldOfValues {
        degree,
        is_real,
        is_imaginary_quadratic: degree == 2 && !is_real,
        stabilizer,
    })
}

/// True iff every irreducible character has field of values `Q` or an
/// imaginary quadratic field.
pub fn character_cut_criterion(table: &CharacterTable) -> Result<bool> {
    for chi in table.characters() {
        let f = field_of_values(chi)?;
        if f.degree > 2 || (f.degree == 2 && !f.is_imaginary_quadratic) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨χ, χ⟩ = 1` and `χ(1) > 0`.
pub fn is_irreducible_character(chi: &ClassFunction) -> Result<bool> {
    Ok(inner_product(chi, chi)? == Rational::one()
        && chi
            .degree()
            .to_rational()
            .is_some_and(|d| d > Rational::zero()))
}
