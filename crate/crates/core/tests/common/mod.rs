#![allow(dead_code)]

use cyclograph_core::group::{enumerate, Limits};
use cyclograph_core::{AffineGroupSpec, EnumeratedGroup, Permutation};

pub struct Fixture {
    pub name: &'static str,
    pub degree: usize,
    pub gens: Vec<Permutation>,
}

impl Fixture {
    pub fn group(&self) -> EnumeratedGroup {
        enumerate(self.degree, &self.gens, Limits::default()).expect(self.name)
    }
}

pub fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
    let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

pub fn map(degree: usize, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images((0..degree as u32).map(f).collect()).unwrap()
}

fn fixture(name: &'static str, degree: usize, gens: Vec<Permutation>) -> Fixture {
    Fixture { name, degree, gens }
}

/// Cyclic group of order n acting regularly on n points.
pub fn cyclic(n: usize) -> Permutation {
    map(n, |x| (x + 1) % n as u32)
}

/// Z_n with translation and multiplication by a unit `u`.
fn affine_line(name: &'static str, n: u32, u: u32) -> Fixture {
    fixture(
        name,
        n as usize,
        vec![map(n as usize, |x| (x + 1) % n), map(n as usize, |x| x * u % n)],
    )
}

/// Q8 acting on itself by right multiplication. Elements are encoded
/// `2 * unit + sign`, units 1, i, j, k as 0..3.
pub fn quaternion_generators() -> (Permutation, Permutation) {
    // unit products: table[a][b] = (sign flip, unit) for e_a e_b
    const TABLE: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let times = |g: u32| {
        map(8, move |x| {
            let (ua, sa) = (x / 2, x % 2);
            let (ub, sb) = (g / 2, g % 2);
            let (flip, u) = TABLE[ua as usize][ub as usize];
            2 * u + (sa ^ sb ^ flip)
        })
    };
    (times(2), times(4))
}

fn extend(p: &Permutation, degree: usize) -> Permutation {
    let mut images = p.images().to_vec();
    images.extend(images.len() as u32..degree as u32);
    Permutation::from_images(images).unwrap()
}

fn shifted(p: &Permutation, offset: u32, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in p.images().iter().enumerate() {
        images[i + offset as usize] = x + offset;
    }
    Permutation::from_images(images).unwrap()
}

/// Prime-power order groups, with their prime.
pub fn p_groups() -> Vec<(Fixture, u64)> {
    let (qi, qj) = quaternion_generators();
    let heis = |f: fn(u32, u32) -> (u32, u32)| {
        map(9, move |v| {
            let (x, y) = f(v / 3, v % 3);
            3 * (x % 3) + y % 3
        })
    };
    vec![
        (fixture("Z2", 2, vec![cyclic(2)]), 2),
        (fixture("Z8", 8, vec![cyclic(8)]), 2),
        (fixture("Z4xZ2", 6, vec![cyc(6, &[&[0, 1, 2, 3], &[4, 5]])]), 2),
        (fixture("Z4xZ2 (split)", 6, vec![cyc(6, &[&[0, 1, 2, 3]]), cyc(6, &[&[4, 5]])]), 2),
        (
            fixture("Z2^3", 6, vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[2, 3]]), cyc(6, &[&[4, 5]])]),
            2,
        ),
        (fixture("D8", 4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]), 2),
        (fixture("Q8", 8, vec![qi, qj]), 2),
        (affine_line("D16", 8, 7), 2),
        (affine_line("SD16", 8, 3), 2),
        (affine_line("M16", 8, 5), 2),
        (fixture("Z4xZ4", 8, vec![cyc(8, &[&[0, 1, 2, 3]]), cyc(8, &[&[4, 5, 6, 7]])]), 2),
        (fixture("Z3", 3, vec![cyclic(3)]), 3),
        (
            fixture(
                "Z3^3",
                9,
                vec![cyc(9, &[&[0, 1, 2]]), cyc(9, &[&[3, 4, 5]]), cyc(9, &[&[6, 7, 8]])],
            ),
            3,
        ),
        (
            fixture(
                "Heisenberg 27",
                9,
                vec![
                    heis(|x, y| (x + 1, y)),
                    heis(|x, y| (x, y + x)),
                    heis(|x, y| (x, y + 1)),
                ],
            ),
            3,
        ),
        (affine_line("Z9:Z3", 9, 4), 3),
        (fixture("Z25", 25, vec![cyclic(25)]), 5),
        (fixture("Z7", 7, vec![cyclic(7)]), 7),
    ]
}

/// Nilpotent groups whose order has at least two prime divisors.
pub fn nilpotent_mixed() -> Vec<Fixture> {
    let (qi, qj) = quaternion_generators();
    vec![
        fixture("Z6", 6, vec![cyclic(6)]),
        fixture("Z12", 12, vec![cyclic(12)]),
        fixture("Z2xZ6", 8, vec![cyc(8, &[&[0, 1]]), shifted(&cyclic(6), 2, 8)]),
        fixture(
            "Q8xZ3",
            11,
            vec![extend(&qi, 11), extend(&qj, 11), cyc(11, &[&[8, 9, 10]])],
        ),
        fixture("D8xZ3", 7, vec![cyc(7, &[&[0, 1, 2, 3]]), cyc(7, &[&[0, 2]]), cyc(7, &[&[4, 5, 6]])]),
    ]
}

/// Frobenius groups with their kernel order and expected Δ count.
pub fn frobenius() -> Vec<(Fixture, usize, u64)> {
    vec![
        (fixture("S3", 3, vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]), 3, 4),
        (
            fixture("A4", 4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1], &[2, 3]])]),
            4,
            7,
        ),
        (affine_line("D30", 15, 14), 15, 16),
        (affine_line("Z7:Z3", 7, 2), 7, 8),
        (affine_line("AGL(1,5)", 5, 2), 5, 6),
        (affine_line("D10", 5, 4), 5, 6),
    ]
}

/// Groups with neither Frobenius nor 2-Frobenius structure.
pub fn other_groups() -> Vec<Fixture> {
    vec![
        fixture("S5", 5, vec![cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])]),
        fixture("A5", 5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])]),
        fixture("D12", 6, vec![cyclic(6), map(6, |x| (6 - x) % 6)]),
        fixture("S3xS3", 6, vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4]]), cyc(6, &[&[3, 4, 5]])]),
    ]
}

pub fn s4() -> Fixture {
    fixture("S4", 4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])])
}

pub struct AffineCase {
    pub fields: Vec<(u64, u32)>,
    pub d: u64,
    pub e: u64,
}

impl AffineCase {
    pub fn spec(&self) -> AffineGroupSpec {
        AffineGroupSpec::new(&self.fields, self.d, self.e).unwrap()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.fields.iter().map(|(p, n)| format!("({p},{n})")).collect();
        format!("[{}] d={} e={}", parts.join(","), self.d, self.e)
    }
}

pub fn affine(fields: &[(u64, u32)], d: u64, e: u64) -> AffineCase {
    AffineCase {
        fields: fields.to_vec(),
        d,
        e,
    }
}

pub fn enumerate_affine(spec: &AffineGroupSpec) -> EnumeratedGroup {
    let gens = spec.to_permutation_group(1 << 20).unwrap();
    enumerate(spec.k_order() as usize, &gens, Limits::default()).unwrap()
}

/// Affine specs with a single characteristic p not dividing d·e and
/// `|K| <= 1024`.
pub fn structured_sweep() -> Vec<AffineCase> {
    vec![
        affine(&[(2, 3)], 7, 3),
        affine(&[(5, 2)], 3, 2),
        affine(&[(2, 6)], 7, 3),
        affine(&[(7, 3)], 19, 3),
        affine(&[(2, 5)], 31, 5),
        affine(&[(5, 3)], 31, 3),
        affine(&[(2, 9)], 73, 3),
        affine(&[(3, 4)], 5, 2),
        affine(&[(3, 4)], 5, 4),
        affine(&[(5, 4)], 13, 2),
        affine(&[(5, 4)], 13, 4),
        affine(&[(11, 2)], 3, 2),
        affine(&[(13, 2)], 7, 2),
        affine(&[(17, 2)], 3, 2),
        affine(&[(17, 2)], 9, 2),
        affine(&[(19, 2)], 5, 2),
        affine(&[(23, 2)], 3, 2),
        affine(&[(29, 2)], 3, 2),
        affine(&[(29, 2)], 5, 2),
        affine(&[(29, 2)], 15, 2),
        affine(&[(2, 3), (2, 3)], 7, 3),
        affine(&[(5, 2), (5, 2)], 3, 2),
    ]
}

/// 2-Frobenius affine groups small enough to enumerate quickly, covering
/// all three cases.
pub fn small_two_frobenius() -> Vec<AffineCase> {
    vec![
        affine(&[(2, 2)], 3, 2),
        affine(&[(2, 4)], 5, 2),
        affine(&[(2, 4)], 5, 4),
        affine(&[(2, 8)], 17, 2),
        affine(&[(5, 2)], 3, 2),
        affine(&[(2, 3)], 7, 3),
        affine(&[(2, 2), (5, 2)], 3, 2),
        affine(&[(3, 4)], 5, 2),
        affine(&[(13, 2)], 7, 2),
        affine(&[(2, 3), (2, 3)], 7, 3),
        affine(&[(3, 6)], 7, 6),
        affine(&[(2, 2), (11, 2)], 3, 2),
    ]
}
