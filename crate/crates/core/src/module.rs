//! Finite modules `M = R/I_1 ⊕ ... ⊕ R/I_t` over a [`RingSpec`], their full
//! submodule lattice, and the colon / product / annihilator operators.
//!
//! Each cyclic summand `R/I_j` splits by ring slot into `Z_{d_ij}` with
//! `d_ij` the `i`-th divisor of `I_j`; these are the flat coordinates of `M`.
//! Elements are mixed-radix codes over the flat coordinates (`0` is the zero
//! element), and a submodule is the sorted list of its element codes.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    divisors_of, factorize, parse_uint_list, strip_parens, CombineMode, Ideal, RingElem, RingSpec,
};
use crate::error::{parse_err, Error, Result};

/// Hard ceiling on `|M|` regardless of configured caps; codes are `u32`.
pub const MAX_MODULE_ORDER: u64 = 1 << 24;

/// Enumeration limits. Exceeding one is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_order: u64,
    pub max_submodules: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_order: 4096,
            max_submodules: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coord {
    pub slot: usize,
    pub component: usize,
    pub modulus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    ring: RingSpec,
    components: Vec<Ideal>,
    coords: Vec<Coord>,
    order: u64,
}

/// A module element with its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModElem {
    pub code: u32,
    pub coords: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    elements: Vec<u32>,
    colon: Ideal,
    is_zero: bool,
    is_proper: bool,
}

impl Submodule {
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// `(N:M)`.
    pub fn colon(&self) -> &Ideal {
        &self.colon
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    pub fn is_proper(&self) -> bool {
        self.is_proper
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, code: u32) -> bool {
        self.elements.binary_search(&code).is_ok()
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        is_sorted_subset(&self.elements, &other.elements)
    }
}

pub(crate) fn is_sorted_subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

pub(crate) fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    let set: HashSet<u32> = b.iter().copied().collect();
    a.iter().copied().filter(|x| set.contains(x)).collect()
}

impl ModuleSpec {
    pub fn new(ring: RingSpec, components: Vec<Ideal>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidModule("at least one component is required".into()));
        }
        for c in &components {
            ring.check_ideal(c)?;
        }
        let mut coords = Vec::new();
        for (j, c) in components.iter().enumerate() {
            for (i, &d) in c.divisors().iter().enumerate() {
                if d > 1 {
                    coords.push(Coord {
                        slot: i,
                        component: j,
                        modulus: d,
                    });
                }
            }
        }
        let mut order: u64 = 1;
        for c in &coords {
            order = order
                .checked_mul(c.modulus)
                .filter(|&o| o <= MAX_MODULE_ORDER)
                .ok_or(Error::ModuleTooLarge {
                    order: u64::MAX,
                    cap: MAX_MODULE_ORDER,
                })?;
        }
        Ok(Self {
            ring,
            components,
            coords,
            order,
        })
    }

    /// `R` as a module over itself.
    pub fn regular(ring: RingSpec) -> Self {
        let zero = ring.zero_ideal();
        Self::new(ring, vec![zero]).expect("regular module is valid")
    }

    /// Parses semicolon-separated components, each a divisor tuple for the
    /// ring, e.g. `4;3` over `12`.
    pub fn parse(ring: &RingSpec, text: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut pos = 0;
        for piece in text.split(';') {
            let (inner, offset) = strip_parens(piece, pos)?;
            let gens = parse_uint_list(inner, offset)?;
            if gens.len() != ring.arity() {
                return Err(parse_err(
                    offset,
                    format!("expected {} entries, found {}", ring.arity(), gens.len()),
                ));
            }
            components.push(ring.ideal_from_generators(&gens)?);
            pos += piece.len() + 1;
        }
        Self::new(ring.clone(), components)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn components(&self) -> &[Ideal] {
        &self.components
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `R=<ring> M=<module>`, the text form used in reports.
    pub fn instance_label(&self) -> String {
        format!("R={} M={}", self.ring, self)
    }

    pub fn decode(&self, mut code: u32) -> Vec<u64> {
        self.coords
            .iter()
            .map(|c| {
                let m = c.modulus as u32;
                let d = code % m;
                code /= m;
                d as u64
            })
            .collect()
    }

    pub fn encode(&self, digits: &[u64]) -> u32 {
        let mut code = 0u64;
        let mut stride = 1u64;
        for (c, &d) in self.coords.iter().zip(digits) {
            code += (d % c.modulus) * stride;
            stride *= c.modulus;
        }
        code as u32
    }

    pub fn elem(&self, code: u32) -> ModElem {
        ModElem {
            code,
            coords: self.decode(code),
        }
    }

    fn map_digits(&self, a: u32, b: u32, f: impl Fn(&Coord, u64, u64) -> u64) -> u32 {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut stride = 1u64;
        for c in &self.coords {
            let m = c.modulus;
            out += f(c, a % m, b % m) * stride;
            a /= m;
            b /= m;
            stride *= m;
        }
        out as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.map_digits(a, b, |c, x, y| (x + y) % c.modulus)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.map_digits(a, 0, |c, x, _| (c.modulus - x) % c.modulus)
    }

    pub fn scale(&self, r: &RingElem, m: u32) -> u32 {
        let res = r.residues();
        self.map_digits(m, 0, |c, x, _| (x * (res[c.slot] % c.modulus)) % c.modulus)
    }

    /// Action of `t` placed in ring slot `slot` (zero elsewhere).
    pub fn scale_slot(&self, slot: usize, t: u64, m: u32) -> u32 {
        self.map_digits(m, 0, |c, x, _| {
            if c.slot == slot {
                (x * (t % c.modulus)) % c.modulus
            } else {
                0
            }
        })
    }

    /// Generator of the `j`-th cyclic summand.
    pub fn component_generator(&self, j: usize) -> u32 {
        let digits: Vec<u64> = self.coords.iter().map(|c| u64::from(c.component == j)).collect();
        self.encode(&digits)
    }

    pub fn component_generators(&self) -> Vec<u32> {
        (0..self.components.len()).map(|j| self.component_generator(j)).collect()
    }

    /// The additive subgroup generated by `base ∪ gens`, where `base` is
    /// already a subgroup. Sorted.
    pub fn span_from(&self, base: &[u32], gens: &[u32]) -> Vec<u32> {
        let mut mark = vec![false; self.order as usize];
        let mut elems: Vec<u32> = base.to_vec();
        if elems.is_empty() {
            elems.push(0);
        }
        for &e in &elems {
            mark[e as usize] = true;
        }
        for &g in gens {
            let coset_base = elems.clone();
            let mut mult = g;
            while !mark[mult as usize] {
                for &x in &coset_base {
                    let y = self.add(x, mult);
                    mark[y as usize] = true;
                    elems.push(y);
                }
                mult = self.add(mult, g);
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Slot restrictions of `m`; their additive span is the cyclic submodule `Rm`.
    pub fn slot_parts(&self, m: u32) -> Vec<u32> {
        (0..self.ring.arity())
            .map(|i| self.scale_slot(i, 1, m))
            .filter(|&x| x != 0)
            .collect()
    }

    /// The submodule generated by arbitrary elements.
    pub fn generated(&self, gens: &[u32]) -> Vec<u32> {
        let parts: Vec<u32> = gens.iter().flat_map(|&g| self.slot_parts(g)).collect();
        self.span_from(&[], &parts)
    }

    /// `(target : source)`: ring elements mapping every element of `source`
    /// into `target` (which must be sorted). `source` may be any generating
    /// set of the ambient submodule.
    pub fn colon(&self, target: &[u32], source: &[u32]) -> Ideal {
        let divisors = self
            .ring
            .moduli()
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                divisors_of(n)
                    .into_iter()
                    .find(|&t| {
                        source
                            .iter()
                            .all(|&b| target.binary_search(&self.scale_slot(i, t, b)).is_ok())
                    })
                    .unwrap_or(n)
            })
            .collect();
        self.ring.ideal(divisors).expect("divisors of the moduli")
    }

    /// `(N:M)` for a sorted element list.
    pub fn colon_into_module(&self, elements: &[u32]) -> Ideal {
        self.colon(elements, &self.component_generators())
    }

    /// `I·B` for `B` given by generators.
    pub fn ideal_times(&self, ideal: &Ideal, gens: &[u32]) -> Vec<u32> {
        let mut parts = Vec::new();
        for (i, &d) in ideal.divisors().iter().enumerate() {
            for &b in gens {
                let x = self.scale_slot(i, d, b);
                if x != 0 {
                    parts.push(x);
                }
            }
        }
        self.span_from(&[], &parts)
    }

    pub fn annihilator(&self) -> Ideal {
        self.colon_into_module(&[0])
    }

    /// Wraps a sorted element list known to be a submodule.
    pub fn submodule(&self, elements: Vec<u32>) -> Submodule {
        let colon = self.colon_into_module(&elements);
        Submodule {
            is_zero: elements.len() == 1,
            is_proper: (elements.len() as u64) < self.order,
            elements,
            colon,
        }
    }

    /// Validates closure under addition and the ring action before wrapping.
    pub fn try_submodule(&self, mut elements: Vec<u32>) -> Result<Submodule> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&e| u64::from(e) >= self.order) {
            return Err(Error::InvalidModule("element list is not a submodule".into()));
        }
        let closed = self.generated(&elements) == elements;
        if !closed {
            return Err(Error::InvalidModule("element list is not a submodule".into()));
        }
        Ok(self.submodule(elements))
    }

    pub fn zero_submodule(&self) -> Submodule {
        self.submodule(vec![0])
    }

    pub fn full_submodule(&self) -> Submodule {
        self.submodule((0..self.order as u32).collect())
    }

    /// `eM` as a module in its own right: `R/(I_j + (1-e)R)` for each summand.
    pub fn idempotent_factor(&self, e: &RingElem) -> Result<ModuleSpec> {
        if !self.ring.is_idempotent(e) {
            return Err(Error::NotIdempotent(e.to_string()));
        }
        let complement = self.ring.principal(&self.ring.sub(&self.ring.one(), e));
        let components = self
            .components
            .iter()
            .map(|c| self.ring.combine_unchecked(c, &complement, CombineMode::Sum))
            .collect();
        ModuleSpec::new(self.ring.clone(), components)
    }

    /// Number of primary cyclic summands `Z_{p^a}` in the decomposition of
    /// `M`, and how many of those are simple (`a = 1`).
    pub fn local_summand_counts(&self) -> (usize, usize) {
        let mut total = 0;
        let mut simple = 0;
        for c in &self.coords {
            for (_, a) in factorize(c.modulus) {
                total += 1;
                if a == 1 {
                    simple += 1;
                }
            }
        }
        (total, simple)
    }

    pub fn elem_text(&self, code: u32) -> String {
        let d = self.decode(code);
        if d.len() == 1 {
            d[0].to_string()
        } else {
            let body = d.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            format!("({body})")
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| c.divisors().iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Every submodule of a module, in canonical order (size, then elements).
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    module: ModuleSpec,
    subs: Vec<Submodule>,
    index: HashMap<Vec<u32>, usize>,
}

/// Enumerates all submodules as the closure of the cyclic submodules under
/// sums.
pub fn enumerate_submodules(module: &ModuleSpec, caps: &Caps) -> Result<SubmoduleLattice> {
    if module.order() > caps.max_order {
        return Err(Error::ModuleTooLarge {
            order: module.order(),
            cap: caps.max_order,
        });
    }
    let order = module.order() as u32;

    let mut cyclic_gens: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(vec![0]);
    let mut found: Vec<Vec<u32>> = vec![vec![0]];
    for m in 1..order {
        let gens = module.slot_parts(m);
        let elems = module.span_from(&[], &gens);
        if seen.insert(elems.clone()) {
            cyclic_gens.push(gens);
            found.push(elems);
            if found.len() > caps.max_submodules {
                return Err(Error::TooManySubmodules {
                    found: found.len(),
                    cap: caps.max_submodules,
                });
            }
        }
    }

    let mut queue: Vec<usize> = (1..found.len()).collect();
    let mut mark = vec![false; order as usize];
    while let Some(idx) = queue.pop() {
        let base = found[idx].clone();
        for &e in &base {
            mark[e as usize] = true;
        }
        for gens in &cyclic_gens {
            if gens.iter().all(|&g| mark[g as usize]) {
                continue;
            }
            let sum = module.span_from(&base, gens);
            if seen.insert(sum.clone()) {
                found.push(sum);
                queue.push(found.len() - 1);
                if found.len() > caps.max_submodules {
                    return Err(Error::TooManySubmodules {
                        found: found.len(),
                        cap: caps.max_submodules,
                    });
                }
            }
        }
        for &e in &base {
            mark[e as usize] = false;
        }
    }

    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let subs: Vec<Submodule> = found.into_iter().map(|e| module.submodule(e)).collect();
    let index = subs.iter().enumerate().map(|(i, s)| (s.elements.clone(), i)).collect();
    Ok(SubmoduleLattice {
        module: module.clone(),
        subs,
        index,
    })
}

impl SubmoduleLattice {
    pub fn module(&self) -> &ModuleSpec {
        &self.module
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.subs
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.subs[i]
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn top_index(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn index_of(&self, elements: &[u32]) -> Option<usize> {
        self.index.get(elements).copied()
    }

    pub fn annihilator(&self) -> &Ideal {
        self.subs[0].colon()
    }

    /// Looks up the product `NK` in the lattice.
    pub fn product_index(&self, n: usize, k: usize) -> usize {
        let p = submodule_product(&self.module, &self.subs[n], &self.subs[k]);
        self.index_of(p.elements()).expect("products are submodules")
    }

    /// Whether `NK = (0)`, decided on colon ideals alone:
    /// `(N:M)(K:M)M = 0` iff `(N:M)(K:M) ⊆ Ann(M)`.
    pub fn product_is_zero(&self, n: usize, k: usize) -> bool {
        let ring = self.module.ring();
        let prod = ring.combine_unchecked(self.subs[n].colon(), self.subs[k].colon(), CombineMode::Product);
        ring.ideal_le(&prod, self.annihilator())
    }

    /// Text form of a submodule: `(0)`, `M`, its colon ideal when `N = (N:M)M`,
    /// otherwise `<g1,g2,...>` with greedily chosen generators.
    pub fn label(&self, i: usize) -> String {
        submodule_label(&self.module, &self.subs[i])
    }

    pub fn intersection_index(&self, idx: &[usize]) -> usize {
        let mut acc: Vec<u32> = self.subs[self.top_index()].elements.clone();
        for &i in idx {
            acc = sorted_intersection(&acc, &self.subs[i].elements);
        }
        self.index_of(&acc).expect("intersections are submodules")
    }
}

pub fn submodule_label(module: &ModuleSpec, n: &Submodule) -> String {
    if n.is_zero() {
        return "(0)".into();
    }
    if !n.is_proper() {
        return "M".into();
    }
    if module.ideal_times(n.colon(), &module.component_generators()) == n.elements {
        return n.colon().to_string();
    }
    let mut span = vec![0u32];
    let mut gens = Vec::new();
    for &e in &n.elements {
        if span.binary_search(&e).is_err() {
            gens.push(e);
            span = module.span_from(&span, &module.slot_parts(e));
        }
    }
    let parts: Vec<String> = gens.iter().map(|&g| module.elem_text(g)).collect();
    format!("<{}>", parts.join(","))
}

/// `NK = (N:M)(K:M)M`.
pub fn submodule_product(module: &ModuleSpec, n: &Submodule, k: &Submodule) -> Submodule {
    let ideal = module
        .ring()
        .combine_unchecked(n.colon(), k.colon(), CombineMode::Product);
    module.submodule(module.ideal_times(&ideal, &module.component_generators()))
}

/// `ann(N) = { m : (N:M) m = 0 }`.
pub fn ann_of_submodule(module: &ModuleSpec, n: &Submodule) -> Submodule {
    let d = n.colon().divisors();
    let elements = (0..module.order() as u32)
        .filter(|&m| (0..d.len()).all(|i| module.scale_slot(i, d[i], m) == 0))
        .collect();
    module.submodule(elements)
}

/// Exhaustive primality test of a proper submodule over all `(r, e)` pairs.
pub fn is_prime_submodule(module: &ModuleSpec, p: &Submodule) -> Result<bool> {
    if !p.is_proper() {
        return Err(Error::NotProper);
    }
    let all: Vec<u32> = (0..module.order() as u32).collect();
    Ok(is_prime_in(module, p.elements(), &all))
}

/// Primality of `p` as a submodule of the submodule `ambient`, with
/// `(p : ambient)` in place of `(P:M)`. Both lists sorted.
pub fn is_prime_in(module: &ModuleSpec, p: &[u32], ambient: &[u32]) -> bool {
    if p.len() >= ambient.len() {
        return false;
    }
    let ring = module.ring();
    let colon = module.colon(p, ambient);
    for r in ring.elements() {
        if ring.contains(&colon, &r) {
            continue;
        }
        for &e in ambient {
            if p.binary_search(&e).is_err() && p.binary_search(&module.scale(&r, e)).is_ok() {
                return false;
            }
        }
    }
    true
}

/// `ann_R(m)`: per slot, the order of the slot part of `m`.
pub fn element_annihilator(module: &ModuleSpec, m: u32) -> Ideal {
    let ring = module.ring();
    let divisors = ring
        .moduli()
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            divisors_of(n)
                .into_iter()
                .find(|&t| module.scale_slot(i, t, m) == 0)
                .unwrap_or(n)
        })
        .collect();
    ring.ideal(divisors).expect("divisors of the moduli")
}

/// `(eM, (1-e)M)` for an idempotent `e`.
pub fn idempotent_decompose(module: &ModuleSpec, e: &RingElem) -> Result<(Submodule, Submodule)> {
    let ring = module.ring();
    if e.residues().len() != ring.arity() {
        return Err(Error::RingMismatch);
    }
    if !ring.is_idempotent(e) {
        return Err(Error::NotIdempotent(e.to_string()));
    }
    let f = ring.sub(&ring.one(), e);
    let image = |x: &RingElem| {
        let mut v: Vec<u32> = (0..module.order() as u32).map(|m| module.scale(x, m)).collect();
        v.sort_unstable();
        v.dedup();
        module.submodule(v)
    };
    Ok((image(e), image(&f)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub annihilator: Ideal,
    pub is_faithful: bool,
    pub max_submodules: Vec<usize>,
    pub jacobson: usize,
    pub minimal_submodules: Vec<usize>,
    pub zero_divisors: Vec<RingElem>,
    pub associated_primes: Vec<Ideal>,
    pub is_local: bool,
    pub is_simple: bool,
    pub is_prime_module: bool,
    pub is_domain_module: bool,
    pub m_is_vertex: bool,
    pub local_summands: usize,
    pub simple_summands: usize,
}

impl StructureReport {
    /// `M ≅ M_1 ⊕ M_2` with both summands simple.
    pub fn is_two_simple(&self) -> bool {
        self.local_summands == 2 && self.simple_summands == 2
    }

    /// Submodules are given by their labels in `lattice`.
    pub fn to_json(&self, lattice: &SubmoduleLattice) -> Value {
        let labels = |v: &[usize]| v.iter().map(|&i| lattice.label(i)).collect::<Vec<_>>();
        json!({
            "ring": lattice.module().ring(),
            "module": lattice.module().to_string(),
            "order": lattice.module().order(),
            "submodules": lattice.len(),
            "annihilator": self.annihilator,
            "is_faithful": self.is_faithful,
            "max_submodules": labels(&self.max_submodules),
            "jacobson": lattice.label(self.jacobson),
            "minimal_submodules": labels(&self.minimal_submodules),
            "zero_divisors": self.zero_divisors,
            "associated_primes": self.associated_primes,
            "is_local": self.is_local,
            "is_simple": self.is_simple,
            "is_prime_module": self.is_prime_module,
            "is_domain_module": self.is_domain_module,
            "m_is_vertex": self.m_is_vertex,
            "local_summands": self.local_summands,
            "simple_summands": self.simple_summands,
        })
    }
}

pub fn structure_report(lattice: &SubmoduleLattice) -> StructureReport {
    let module = lattice.module();
    let ring = module.ring();
    let subs = lattice.submodules();
    let top = lattice.top_index();

    let proper: Vec<usize> = (0..subs.len()).filter(|&i| subs[i].is_proper()).collect();
    let max_submodules: Vec<usize> = proper
        .iter()
        .copied()
        .filter(|&i| {
            !proper
                .iter()
                .any(|&j| subs[j].len() > subs[i].len() && subs[i].is_subset_of(&subs[j]))
        })
        .collect();
    let jacobson = lattice.intersection_index(&max_submodules);
    let nonzero: Vec<usize> = (0..subs.len()).filter(|&i| !subs[i].is_zero()).collect();
    let minimal_submodules = nonzero
        .iter()
        .copied()
        .filter(|&i| {
            !nonzero
                .iter()
                .any(|&j| subs[j].len() < subs[i].len() && subs[j].is_subset_of(&subs[i]))
        })
        .collect();

    let mut anns: Vec<Ideal> = (1..module.order() as u32)
        .map(|m| element_annihilator(module, m))
        .collect();
    anns.sort();
    anns.dedup();
    let zero_divisors = ring
        .elements()
        .filter(|r| anns.iter().any(|a| ring.contains(a, r)))
        .collect::<Vec<_>>();
    let associated_primes = anns.iter().filter(|a| ring.is_prime_ideal(a)).cloned().collect();

    let annihilator = lattice.annihilator().clone();
    let m_is_vertex = subs
        .iter()
        .any(|s| !s.is_zero() && s.is_proper() && *s.colon() == annihilator);
    let is_prime_module =
        module.order() > 1 && is_prime_submodule(module, &subs[0]).unwrap_or(false);
    let (local_summands, simple_summands) = module.local_summand_counts();
    StructureReport {
        is_faithful: ring.is_zero_ideal(&annihilator),
        annihilator,
        is_local: max_submodules.len() == 1,
        is_simple: subs.len() == 2,
        is_prime_module,
        is_domain_module: module.order() > 1
            && zero_divisors.len() == 1
            && zero_divisors[0].is_zero(),
        m_is_vertex,
        max_submodules,
        jacobson: if top == 0 { 0 } else { jacobson },
        minimal_submodules,
        zero_divisors,
        associated_primes,
        local_summands,
        simple_summands,
    }
}
