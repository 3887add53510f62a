//! Fully enumerated permutation groups.
//!
//! Elements live in one flat image buffer, sorted lexicographically by image
//! sequence, so an element's index is canonical and membership is a binary
//! search. The identity is always index 0. Subgroups are element-index sets
//! over a parent group.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use crate::arith::{is_power_of, is_prime, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::perm::{commute_slices, compose_into, invert_into, order_of_images, Permutation};

pub const DEFAULT_ENUM_CAP: usize = 200_000;
pub const DEFAULT_POINT_BUDGET: usize = 1 << 28;

/// Bounds on a single enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of group elements.
    pub max_order: usize,
    /// Maximum number of stored image points (`order * degree`).
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_ENUM_CAP,
            max_points: DEFAULT_POINT_BUDGET,
        }
    }
}

impl Limits {
    pub fn with_cap(max_order: usize) -> Self {
        Limits {
            max_order,
            ..Limits::default()
        }
    }
}

pub struct EnumeratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    data: Vec<u32>,
    orders: Vec<u64>,
}

impl core::fmt::Debug for EnumeratedGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("EnumeratedGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of `generators` on `degree` points.
pub fn enumerate(degree: usize, generators: &[Permutation], limits: Limits) -> Result<EnumeratedGroup> {
    EnumeratedGroup::enumerate(degree, generators, limits)
}

impl EnumeratedGroup {
    pub fn enumerate(degree: usize, generators: &[Permutation], limits: Limits) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let hasher = DefaultHashBuilder::default();
        let mut data: Vec<u32> = (0..degree as u32).collect();
        let mut table: HashTable<u32> = HashTable::new();
        table.insert_unique(hasher.hash_one(&data[..]), 0, |_| 0);
        let mut count = 1usize;
        let mut buf = vec![0u32; degree];
        let mut next = 0usize;
        while next < count {
            for g in generators {
                compose_into(&data[next * degree..(next + 1) * degree], g.images(), &mut buf);
                let h = hasher.hash_one(&buf[..]);
                let found = table
                    .find(h, |&j| {
                        let j = j as usize;
                        data[j * degree..(j + 1) * degree] == buf[..]
                    })
                    .is_some();
                if found {
                    continue;
                }
                if count + 1 > limits.max_order {
                    return Err(Error::CapExceeded { cap: limits.max_order });
                }
                if (count + 1).saturating_mul(degree) > limits.max_points {
                    return Err(Error::StorageExceeded { limit: limits.max_points });
                }
                data.extend_from_slice(&buf);
                table.insert_unique(h, count as u32, |&j| {
                    let j = j as usize;
                    hasher.hash_one(&data[j * degree..(j + 1) * degree])
                });
                count += 1;
            }
            next += 1;
        }
        drop(table);
        Ok(Self::from_unsorted(degree, generators.to_vec(), data))
    }

    fn from_unsorted(degree: usize, generators: Vec<Permutation>, data: Vec<u32>) -> Self {
        let count = data.len() / degree;
        let mut idx: Vec<u32> = (0..count as u32).collect();
        let slice = |i: u32| &data[i as usize * degree..(i as usize + 1) * degree];
        idx.sort_unstable_by(|&a, &b| slice(a).cmp(slice(b)));
        let mut sorted = Vec::with_capacity(data.len());
        for &i in &idx {
            sorted.extend_from_slice(slice(i));
        }
        drop(data);
        Self::from_sorted(degree, generators, sorted)
    }

    fn from_sorted(degree: usize, generators: Vec<Permutation>, data: Vec<u32>) -> Self {
        let orders = data.chunks_exact(degree).map(order_of_images).collect();
        EnumeratedGroup {
            degree,
            generators,
            data,
            orders,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.orders.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn element(&self, i: usize) -> &[u32] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn permutation(&self, i: usize) -> Permutation {
        Permutation::from_images(self.element(i).to_vec()).expect("stored elements are permutations")
    }

    pub fn elements(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.data.chunks_exact(self.degree)
    }

    /// Canonical index of an image sequence, if it is a member.
    pub fn index_of(&self, images: &[u32]) -> Option<usize> {
        if images.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.order());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.element(mid).cmp(images) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn index_of_perm(&self, p: &Permutation) -> Result<usize> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        self.index_of(p.images()).ok_or(Error::NotMember)
    }

    #[inline]
    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for &o in &self.orders {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(k, a)| self.generators[k + 1..].iter().all(|b| commute_slices(a.images(), b.images())))
    }

    fn lookup(&self, images: &[u32]) -> usize {
        self.index_of(images).expect("group is closed under products")
    }

    /// Index of `g_i g_j` (apply `g_i` first). `buf` must have length `degree`.
    #[inline]
    pub fn product_with(&self, i: usize, j: usize, buf: &mut [u32]) -> usize {
        compose_into(self.element(i), self.element(j), buf);
        self.lookup(buf)
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        let mut buf = vec![0; self.degree];
        self.product_with(i, j, &mut buf)
    }

    pub fn inverse(&self, i: usize) -> usize {
        let mut buf = vec![0; self.degree];
        invert_into(self.element(i), &mut buf);
        self.lookup(&buf)
    }

    pub fn power(&self, i: usize, k: u64) -> usize {
        let k = k % self.orders[i];
        let mut buf = vec![0; self.degree];
        let mut acc = 0;
        for _ in 0..k {
            acc = self.product_with(acc, i, &mut buf);
        }
        acc
    }

    /// `g^-1 x g` as an index.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let mut ginv = vec![0; self.degree];
        invert_into(self.element(g), &mut ginv);
        let mut buf = vec![0; self.degree];
        conjugate_into(self.element(x), self.element(g), &ginv, &mut buf);
        self.lookup(&buf)
    }

    #[inline]
    pub fn commute(&self, i: usize, j: usize) -> bool {
        commute_slices(self.element(i), self.element(j))
    }

    /// Sorted powers `x, x^2, .., x^o(x) = 1` of element `i`, as indices.
    pub fn cyclic_subgroup(&self, i: usize) -> Vec<usize> {
        let mut buf = vec![0; self.degree];
        let mut out = Vec::with_capacity(self.orders[i] as usize);
        let mut cur = i;
        loop {
            out.push(cur);
            if cur == 0 {
                break;
            }
            cur = self.product_with(cur, i, &mut buf);
        }
        out
    }

    pub fn centralizer_order(&self, i: usize) -> u64 {
        let x = self.element(i);
        self.elements().filter(|g| commute_slices(x, g)).count() as u64
    }

    /// Centralizer order of a permutation given by value.
    pub fn centralizer_order_of(&self, x: &Permutation) -> Result<u64> {
        let i = self.index_of_perm(x)?;
        Ok(self.centralizer_order(i))
    }

    pub fn centralizer(&self, i: usize) -> Subgroup<'_> {
        let x = self.element(i);
        let flags = self.elements().map(|g| commute_slices(x, g)).collect();
        Subgroup::from_flags(self, flags)
    }

    pub fn center(&self) -> Subgroup<'_> {
        let flags = self
            .elements()
            .map(|g| self.generators.iter().all(|s| commute_slices(g, s.images())))
            .collect();
        Subgroup::from_flags(self, flags)
    }

    fn generator_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.lookup(g.images()))
            .filter(|&i| i != 0)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Conjugacy class of `i`, sorted.
    pub fn class_of(&self, i: usize) -> Vec<usize> {
        let conj = Conjugator::new(self);
        let mut seen = BTreeMap::new();
        seen.insert(i, ());
        let mut queue = VecDeque::from([i]);
        let mut buf = vec![0; self.degree];
        while let Some(x) = queue.pop_front() {
            for s in 0..conj.len() {
                let y = conj.apply(self, x, s, &mut buf);
                if seen.insert(y, ()).is_none() {
                    queue.push_back(y);
                }
            }
        }
        seen.into_keys().collect()
    }

    /// All conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let conj = Conjugator::new(self);
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        let mut buf = vec![0; self.degree];
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                let x = class[head];
                head += 1;
                for s in 0..conj.len() {
                    let y = conj.apply(self, x, s, &mut buf);
                    if !assigned[y] {
                        assigned[y] = true;
                        class.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(&self, seeds: &[usize]) -> Subgroup<'_> {
        let mut c = Closure::new(self);
        for &s in seeds {
            c.add_generator(s);
        }
        c.close(|_| true);
        c.finish()
    }

    pub fn subgroup_of(&self, elements: &[Permutation]) -> Result<Subgroup<'_>> {
        let idx = elements.iter().map(|p| self.index_of_perm(p)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&idx))
    }

    /// Least normal subgroup containing the given elements.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup<'_> {
        self.normal_closure_guarded(seeds, |_| true)
            .expect("unguarded closure never aborts")
    }

    pub fn normal_closure_of(&self, elements: &[Permutation]) -> Result<Subgroup<'_>> {
        let idx = elements.iter().map(|p| self.index_of_perm(p)).collect::<Result<Vec<_>>>()?;
        Ok(self.normal_closure(&idx))
    }

    /// Normal closure that gives up (returns `None`) as soon as `keep`
    /// rejects a newly reached element.
    fn normal_closure_guarded(&self, seeds: &[usize], keep: impl Fn(usize) -> bool) -> Option<Subgroup<'_>> {
        let conj = Conjugator::new(self);
        let mut c = Closure::new(self);
        for &s in seeds {
            c.add_generator(s);
        }
        let mut checked = 0;
        let mut buf = vec![0; self.degree];
        loop {
            if !c.close(&keep) {
                return None;
            }
            let mut added = false;
            while checked < c.gens.len() {
                let x = c.gens[checked];
                checked += 1;
                for s in 0..conj.len() {
                    let y = conj.apply(self, x, s, &mut buf);
                    if !c.flags[y] {
                        c.add_generator(y);
                        added = true;
                    }
                }
            }
            if !added {
                return Some(c.finish());
            }
        }
    }

    /// Largest normal p-subgroup `O_p(G)`.
    ///
    /// Normal closures of p-element classes are merged while the result stays
    /// a p-group; a class whose closure with the current core is not a
    /// p-group can never join a larger one either.
    pub fn p_core(&self, p: u64) -> Result<Subgroup<'_>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = self.order();
        let max_size = p_part(n as u64, p) as usize;
        let mut core = self.subgroup(&[]);
        let mut rejected = vec![false; n];
        loop {
            let mut grew = false;
            for x in 1..n {
                if core.contains(x) || rejected[x] || !is_power_of(self.orders[x], p) {
                    continue;
                }
                let mut seeds = core.generators().to_vec();
                seeds.push(x);
                let orders = &self.orders;
                let grown = self.normal_closure_guarded(&seeds, |y| is_power_of(orders[y], p));
                match grown {
                    Some(m) if m.order() <= max_size => {
                        core = m;
                        grew = true;
                    }
                    _ => {
                        for y in self.class_of(x) {
                            rejected[y] = true;
                        }
                    }
                }
            }
            if !grew {
                return Ok(core);
            }
        }
    }

    /// Fitting subgroup: the product of `O_p(G)` over primes dividing `|G|`.
    pub fn fitting(&self) -> Subgroup<'_> {
        let mut seeds = Vec::new();
        for p in prime_divisors(self.order() as u64) {
            let core = self.p_core(p).expect("prime divisor");
            seeds.extend_from_slice(core.generators());
        }
        self.subgroup(&seeds)
    }

    pub fn is_normal(&self, sub: &Subgroup<'_>) -> bool {
        let conj = Conjugator::new(self);
        let mut buf = vec![0; self.degree];
        sub.generators()
            .iter()
            .all(|&x| (0..conj.len()).all(|s| sub.contains(conj.apply(self, x, s, &mut buf))))
    }

    /// Re-index a subgroup of some other group whose elements lie in `self`.
    pub fn embed(&self, sub: &Subgroup<'_>) -> Result<Subgroup<'_>> {
        let mut flags = vec![false; self.order()];
        for &m in sub.members() {
            let i = self.index_of(sub.group().element(m)).ok_or(Error::NotMember)?;
            flags[i] = true;
        }
        Ok(Subgroup::from_flags(self, flags))
    }

    /// Permutation action of `G` on the right cosets of a normal subgroup.
    pub fn coset_action<'g>(&'g self, normal: &Subgroup<'g>) -> Result<CosetAction<'g>> {
        CosetAction::new(self, normal)
    }
}

pub(crate) fn conjugate_into(x: &[u32], g: &[u32], ginv: &[u32], out: &mut [u32]) {
    // g^-1 x g: ginv first, then x, then g.
    for (o, &a) in out.iter_mut().zip(ginv) {
        *o = g[x[a as usize] as usize];
    }
}

/// Conjugation by each group generator, with inverses precomputed.
struct Conjugator {
    gens: Vec<(Vec<u32>, Vec<u32>)>,
}

impl Conjugator {
    fn new(group: &EnumeratedGroup) -> Self {
        let gens = group
            .generator_indices()
            .into_iter()
            .map(|i| {
                let g = group.element(i).to_vec();
                let mut inv = vec![0; g.len()];
                invert_into(&g, &mut inv);
                (g, inv)
            })
            .collect();
        Conjugator { gens }
    }

    fn len(&self) -> usize {
        self.gens.len()
    }

    #[inline]
    fn apply(&self, group: &EnumeratedGroup, x: usize, s: usize, buf: &mut [u32]) -> usize {
        let (g, inv) = &self.gens[s];
        conjugate_into(group.element(x), g, inv, buf);
        group.lookup(buf)
    }
}

/// Incremental right-multiplication closure over element indices.
struct Closure<'g> {
    group: &'g EnumeratedGroup,
    flags: Vec<bool>,
    list: Vec<usize>,
    gens: Vec<usize>,
    cursor: Vec<usize>,
    buf: Vec<u32>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g EnumeratedGroup) -> Self {
        let mut flags = vec![false; group.order()];
        flags[0] = true;
        Closure {
            group,
            flags,
            list: vec![0],
            gens: Vec::new(),
            cursor: Vec::new(),
            buf: vec![0; group.degree()],
        }
    }

    fn add_generator(&mut self, x: usize) {
        if self.flags[x] {
            return;
        }
        self.flags[x] = true;
        self.list.push(x);
        self.gens.push(x);
        self.cursor.push(0);
    }

    /// Runs to closure; false if `keep` rejected a new element.
    fn close(&mut self, keep: impl Fn(usize) -> bool) -> bool {
        loop {
            let mut progressed = false;
            for k in 0..self.gens.len() {
                while self.cursor[k] < self.list.len() {
                    let e = self.list[self.cursor[k]];
                    self.cursor[k] += 1;
                    progressed = true;
                    let y = self.group.product_with(e, self.gens[k], &mut self.buf);
                    if !self.flags[y] {
                        if !keep(y) {
                            return false;
                        }
                        self.flags[y] = true;
                        self.list.push(y);
                    }
                }
            }
            if !progressed {
                return true;
            }
        }
    }

    fn finish(mut self) -> Subgroup<'g> {
        self.list.sort_unstable();
        Subgroup {
            group: self.group,
            flags: self.flags,
            members: self.list,
            gens: self.gens,
        }
    }
}

/// A subgroup of an enumerated group, as a set of element indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g EnumeratedGroup,
    flags: Vec<bool>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    /// Wraps a membership mask; it must already be closed under products.
    pub(crate) fn from_flags(group: &'g EnumeratedGroup, flags: Vec<bool>) -> Self {
        let members: Vec<usize> = (0..flags.len()).filter(|&i| flags[i]).collect();
        // greedy generating set: each pick strictly grows the span
        let mut c = Closure::new(group);
        for &m in &members {
            if !c.flags[m] {
                c.add_generator(m);
                c.close(|_| true);
            }
        }
        let gens = c.gens;
        Subgroup {
            group,
            flags,
            members,
            gens,
        }
    }

    /// Checked constructor from an arbitrary element set.
    pub fn from_members(group: &'g EnumeratedGroup, members: &[usize]) -> Result<Self> {
        let mut flags = vec![false; group.order()];
        for &m in members {
            *flags.get_mut(m).ok_or(Error::NotMember)? = true;
        }
        if !flags[0] {
            return Err(Error::Inconsistent("subset does not contain the identity".into()));
        }
        let sub = Subgroup::from_flags(group, flags);
        let mut buf = vec![0; group.degree()];
        for &a in &sub.members {
            for &b in &sub.gens {
                if !sub.flags[group.product_with(a, b, &mut buf)] {
                    return Err(Error::Inconsistent("subset is not closed under products".into()));
                }
            }
        }
        Ok(sub)
    }

    pub fn group(&self) -> &'g EnumeratedGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.flags[i]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    /// Materializes the subgroup as its own enumerated group.
    pub fn to_group(&self) -> EnumeratedGroup {
        let deg = self.group.degree();
        let mut data = Vec::with_capacity(self.order() * deg);
        for &m in &self.members {
            data.extend_from_slice(self.group.element(m));
        }
        let gens = self.gens.iter().map(|&g| self.group.permutation(g)).collect();
        // subsets of a sorted list stay sorted
        EnumeratedGroup::from_sorted(deg, gens, data)
    }
}

impl core::fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.gens)
            .finish()
    }
}

/// `G` acting on the right cosets `N g` of a normal subgroup `N`.
pub struct CosetAction<'g> {
    parent: &'g EnumeratedGroup,
    image: EnumeratedGroup,
    coset_of: Vec<u32>,
    coset_image: Vec<usize>,
}

impl<'g> CosetAction<'g> {
    fn new(parent: &'g EnumeratedGroup, normal: &Subgroup<'g>) -> Result<Self> {
        if !core::ptr::eq(parent, normal.group()) {
            return Err(Error::NotMember);
        }
        if !parent.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let n = parent.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut buf = vec![0; parent.degree()];
        for g in 0..n {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &m in normal.members() {
                coset_of[parent.product_with(m, g, &mut buf)] = id;
            }
        }
        let cosets = reps.len();
        let action_of = |x: usize, buf: &mut [u32]| -> Vec<u32> {
            reps.iter()
                .map(|&r| coset_of[parent.product_with(r, x, buf)])
                .collect()
        };
        let gen_images = parent
            .generators()
            .iter()
            .map(|s| {
                let x = parent.lookup(s.images());
                Permutation::from_images(action_of(x, &mut buf))
            })
            .collect::<Result<Vec<_>>>()?;
        let limits = Limits {
            max_order: cosets,
            max_points: DEFAULT_POINT_BUDGET,
        };
        let image = EnumeratedGroup::enumerate(cosets, &gen_images, limits)?;
        if image.order() != cosets {
            return Err(Error::Inconsistent("coset action is not regular on cosets".into()));
        }
        let coset_image = reps
            .iter()
            .map(|&r| image.index_of(&action_of(r, &mut buf)).ok_or(Error::NotMember))
            .collect::<Result<Vec<_>>>()?;
        Ok(CosetAction {
            parent,
            image,
            coset_of,
            coset_image,
        })
    }

    pub fn image(&self) -> &EnumeratedGroup {
        &self.image
    }

    pub fn into_image(self) -> EnumeratedGroup {
        self.image
    }

    pub fn coset_count(&self) -> usize {
        self.coset_image.len()
    }

    /// Image of parent element `g` in the quotient.
    pub fn project(&self, g: usize) -> usize {
        self.coset_image[self.coset_of[g] as usize]
    }

    /// Full preimage in the parent of a subgroup of the image.
    pub fn preimage(&self, sub: &Subgroup<'_>) -> Subgroup<'g> {
        let flags = (0..self.parent.order()).map(|g| sub.contains(self.project(g))).collect();
        Subgroup::from_flags(self.parent, flags)
    }
}
