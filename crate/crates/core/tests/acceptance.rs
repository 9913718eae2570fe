//! Acceptance run: one line per criterion with its timing and limit.
//! Built with `harness = false` so the lines are always printed.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use assoc2::algebra2::{
    check_algebra, check_homomorphism, direct_sum, hochschild_coboundary, AssocAlgebra, Bimodule, HochschildCochain,
    Homomorphism2, TwoTermAlgebra, TwoTermComplex,
};
use assoc2::cohom2::{
    assemble_matrices, d1_apply, d2_residual, is_coboundary, second_cohomology, Cochain2, CochainDims,
};
use assoc2::deform2::{
    adjoint_dims, check_generates, check_nijenhuis, check_trivializing, nijenhuis_deformation, NijenhuisCandidate,
    PolyStructure,
};
use assoc2::exactlin::{rat, Poly, Rational, RationalMatrix};
use assoc2::ext2::{build_extension, check_equivalence, extract_cocycle, extract_representation, Equivalence};
use assoc2::fixtures;
use assoc2::random::{self, Rng64};
use assoc2::rep2::{adjoint_representation, check_representation, Representation2};
use assoc2::report::CoefficientFailure;
use assoc2::tensor::Tensor;
use assoc2::xmod::{
    check_crossed_module, check_xmod_homomorphism, check_xmod_representation, from_strict, semidirect_product,
    to_strict, xmod_adjoint, xmod_assemble, xmod_check_equivalence, xmod_check_generates, xmod_check_nijenhuis,
    xmod_check_trivializing, xmod_d1, xmod_d2_residual, xmod_extension_build, xmod_h2, xmod_nijenhuis_deformation,
    CrossedModule, XCochain2, XCochainDims, XEquivalence, XModRepresentation, XNijenhuisCandidate, XPolyStructure,
};
use common::{golden_cases, run_case};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Line {
    id: usize,
    title: &'static str,
    limit: Duration,
    outcome: Outcome,
    elapsed: Duration,
}

impl Line {
    fn passed(&self) -> bool {
        self.outcome.is_ok() && self.elapsed <= self.limit
    }
}

fn run(id: usize, title: &'static str, limit_secs: u64, f: fn() -> Outcome) -> Line {
    let start = Instant::now();
    let outcome = f();
    Line { id, title, limit: Duration::from_secs(limit_secs), outcome, elapsed: start.elapsed() }
}

fn trivial_11(g: &TwoTermAlgebra) -> Representation2 {
    Representation2::trivial(g, TwoTermComplex::zero(1, 1))
}

fn poly(t: &Tensor) -> Tensor<Poly> {
    t.lift::<Poly>()
}

fn lambda(t: &Tensor) -> Tensor<Poly> {
    t.map(|c| Poly::monomial(c.clone(), 1))
}

// ---------------------------------------------------------------- 1

fn c1_hochschild() -> Outcome {
    let mut rng = random::rng(101);
    let bimods = fixtures::hochschild_bimodules();
    let mut count = 0;
    while count < 102 {
        for (name, a, m) in &bimods {
            for arity in [1usize, 2] {
                let mut shape = vec![a.dim(); arity];
                shape.push(m.dim());
                let f = HochschildCochain { values: random::tensor(&mut rng, &shape, 0.7) };
                let df = ok(hochschild_coboundary(a, m, &f))?;
                let ddf = ok(hochschild_coboundary(a, m, &df))?;
                ensure!(ddf.values.is_zero(), "{name}: d∘d ≠ 0 on an arity-{arity} cochain");
                count += 1;
            }
        }
    }
    Ok(format!("{count} random cochains of arity 1 and 2 over {} bimodules, d∘d exactly zero", bimods.len()))
}

// ---------------------------------------------------------------- 2

/// Axioms of a dims-1/1 2-algebra with constants `d, ee, ef, fe, l3`,
/// written out by hand as scalar identities.
fn scalar_oracle(d: i64, ee: i64, ef: i64, fe: i64, c: i64) -> bool {
    ef * d == d * ee
        && fe * d == d * ee
        && d * ef == d * fe
        && d * c == 0
        && ef * ef - ee * ef == c * d
        && c * d == 0
        && fe * ee - fe * fe == c * d
        && c * (ef + fe - ee) == 0
}

fn one_one(k: [i64; 5]) -> TwoTermAlgebra {
    let t = |shape: &[usize], v: i64| Tensor::from_data(shape, vec![rat(v)]);
    TwoTermAlgebra {
        complex: TwoTermComplex { diff: t(&[1, 1], k[0]) },
        l2_00: t(&[1, 1, 1], k[1]),
        l2_01: t(&[1, 1, 1], k[2]),
        l2_10: t(&[1, 1, 1], k[3]),
        l3: t(&[1, 1, 1, 1], k[4]),
    }
}

/// Returns `(all mutations caught, detail)`; disagreement with the oracle
/// or a failing fixture is an error.
fn c2_checker() -> Result<(bool, String), String> {
    for (name, g) in fixtures::algebras() {
        ensure!(ok(check_algebra(&g))?.passed(), "fixture {name} fails check_algebra");
    }
    let names = ["d", "ee", "ef", "fe", "l3"];
    let base = [0, 1, 1, 1, 0];
    let mut valid = Vec::new();
    let mut total = 0;
    for (i, name) in names.iter().enumerate() {
        for delta in [1, -1] {
            let mut k = base;
            k[i] += delta;
            let caught = !ok(check_algebra(&one_one(k)))?.passed();
            let oracle = !scalar_oracle(k[0], k[1], k[2], k[3], k[4]);
            ensure!(caught == oracle, "checker and scalar oracle disagree on {name} {:+}", delta);
            total += 1;
            if !caught {
                valid.push(format!("{name}={}", k[i]));
            }
        }
    }
    let detail = format!(
        "5 fixtures pass; {}/{total} FIX-U mutations caught, checker = scalar oracle on all {total}; valid 2-algebras: [{}]",
        total - valid.len(),
        valid.join(", ")
    );
    Ok((valid.is_empty(), detail))
}

fn c2_mutations() -> Outcome {
    match c2_checker() {
        Ok((true, d)) => Ok(d),
        Ok((false, d)) => Err(format!("unattainable: {d}")),
        Err(e) => Err(format!("checker error: {e}")),
    }
}

// ---------------------------------------------------------------- 3

fn sample_algebras() -> Vec<(String, TwoTermAlgebra)> {
    let mut out: Vec<(String, TwoTermAlgebra)> =
        fixtures::algebras().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    let mut rng = random::rng(303);
    for (n, g) in fixtures::algebras() {
        let (h, _) = random::isomorph(&mut rng, &g).expect("fixture isomorph");
        out.push((format!("iso({n})"), h));
    }
    out.push(("fix_u+fix_l".into(), direct_sum(&fixtures::fix_u(), &fixtures::fix_l()).unwrap()));
    out
}

fn c3_adjoint() -> Outcome {
    let algs = sample_algebras();
    for (name, g) in &algs {
        ensure!(ok(check_algebra(g))?.passed(), "{name} is not an algebra");
        let rep = check_representation(g, &adjoint_representation(g)).map_err(|e| e.to_string())?;
        ensure!(rep.passed(), "{name}: adjoint fails {:?}", rep.failed());
    }
    let xs = fixtures::crossed_modules();
    for (name, x) in &xs {
        ensure!(ok(check_xmod_representation(x, &xmod_adjoint(x)))?.passed(), "{name}: xmod adjoint fails");
    }
    Ok(format!("{} algebras (fixtures, isomorphs, a direct sum) and {} crossed modules", algs.len(), xs.len()))
}

// ---------------------------------------------------------------- 4

fn c4_complex() -> Outcome {
    let mut pairs = 0;
    for (name, g) in sample_algebras() {
        let reps = [
            ("adjoint", adjoint_representation(&g)),
            ("trivial", trivial_11(&g)),
            ("trivial d=1", Representation2::trivial(&g, TwoTermComplex::new(Tensor::identity(1)).unwrap())),
        ];
        for (rn, r) in reps {
            let m = ok(assemble_matrices(&g, &r))?;
            ensure!(m.d2.mul(&m.d1).is_zero(), "{name}/{rn}: d2·d1 ≠ 0");
            pairs += 1;
        }
    }
    for (name, x) in fixtures::crossed_modules() {
        for (rn, r) in [("adjoint", xmod_adjoint(&x)), ("zero", XModRepresentation::zero(&x, 1, 1))] {
            let m = ok(xmod_assemble(&x, &r))?;
            ensure!(m.d2.mul(&m.d1).is_zero(), "{name}/{rn}: d2·d1 ≠ 0");
            pairs += 1;
        }
    }
    Ok(format!("d2·d1 = 0 as exact matrices on {pairs} (structure, representation) pairs"))
}

// ---------------------------------------------------------------- 5

/// Linear map assembled column by column from the `λ¹` coefficients of a
/// polynomial axiom check.
struct Columns {
    rows: BTreeMap<(String, Vec<usize>, usize), usize>,
    cols: Vec<Vec<(usize, Rational)>>,
}

impl Columns {
    fn new() -> Self {
        Columns { rows: BTreeMap::new(), cols: Vec::new() }
    }

    fn push(&mut self, failures: &[CoefficientFailure]) {
        let mut col = Vec::new();
        for f in failures.iter().filter(|f| f.degree == 1) {
            for (k, v) in f.residual.0.iter().enumerate() {
                let n = self.rows.len();
                let row = *self.rows.entry((f.condition.clone(), f.tuple.clone(), k)).or_insert(n);
                col.push((row, v.clone()));
            }
        }
        self.cols.push(col);
    }

    fn matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows.len(), self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }
}

fn unit(n: usize, k: usize) -> Vec<Rational> {
    (0..n).map(|i| rat((i == k) as i64)).collect()
}

/// `(dim Z², dim B²)` for the adjoint representation, from the axioms of
/// `g + λc` (cocycles) and of `id + λN: g + λc → g` (coboundaries).
fn oracle_adjoint(g: &TwoTermAlgebra) -> Result<(usize, usize), String> {
    let dims = adjoint_dims(g);
    let n2: usize = Cochain2::shapes(dims).iter().map(|s| s.iter().product::<usize>()).sum();
    let (a0, a1) = (g.dim0(), g.dim1());
    let deform = |c: &Cochain2| TwoTermAlgebra::<Poly> {
        complex: TwoTermComplex { diff: poly(&g.complex.diff).add(&lambda(&c.psi)) },
        l2_00: poly(&g.l2_00).add(&lambda(&c.omega)),
        l2_01: poly(&g.l2_01).add(&lambda(&c.mu)),
        l2_10: poly(&g.l2_10).add(&lambda(&c.nu)),
        l3: poly(&g.l3).add(&lambda(&c.theta)),
    };
    let mut z = Columns::new();
    for k in 0..n2 {
        let c = ok(Cochain2::from_flat(dims, &unit(n2, k)))?;
        z.push(&ok(check_algebra(&deform(&c)))?.coefficient_failures());
    }
    let dim_z = n2 - z.matrix().rank();

    let shapes = [vec![a0, a0], vec![a1, a1], vec![a0, a0, a1]];
    let nn: usize = shapes.iter().map(|s| s.iter().product::<usize>()).sum();
    let target = TwoTermAlgebra::<Poly> {
        complex: TwoTermComplex { diff: poly(&g.complex.diff) },
        l2_00: poly(&g.l2_00),
        l2_01: poly(&g.l2_01),
        l2_10: poly(&g.l2_10),
        l3: poly(&g.l3),
    };
    let mut b = Columns::new();
    for k in 0..n2 + nn {
        let c = if k < n2 { ok(Cochain2::from_flat(dims, &unit(n2, k)))? } else { Cochain2::zero(dims) };
        let flat = if k < n2 { vec![rat(0); nn] } else { unit(nn, k - n2) };
        let (n0, rest) = flat.split_at(a0 * a0);
        let (n1, nt) = rest.split_at(a1 * a1);
        let h = Homomorphism2 {
            f0: Tensor::<Poly>::identity(a0).add(&lambda(&Tensor::from_data(&shapes[0], n0.to_vec()))),
            f1: Tensor::<Poly>::identity(a1).add(&lambda(&Tensor::from_data(&shapes[1], n1.to_vec()))),
            f2: lambda(&Tensor::from_data(&shapes[2], nt.to_vec())),
        };
        b.push(&ok(check_homomorphism(&deform(&c), &target, &h))?.coefficient_failures());
    }
    let kernel = b.matrix().kernel_basis();
    let projected: Vec<Vec<Rational>> = kernel.basis().iter().map(|v| v[..n2].to_vec()).collect();
    let dim_b = if projected.is_empty() { 0 } else { RationalMatrix::from_columns(n2, &projected).rank() };
    Ok((dim_z, dim_b))
}

fn oracle_xmod_adjoint(x: &CrossedModule) -> Result<(usize, usize), String> {
    let dims = XCochainDims::of(x, &xmod_adjoint(x));
    let n2: usize = XCochain2::shapes(dims).iter().map(|s| s.iter().product::<usize>()).sum();
    let (p, h) = (x.dim_p(), x.dim_h());
    let deform = |c: &XCochain2| CrossedModule::<Poly> {
        p_alg: AssocAlgebra { mul: poly(&x.p_alg.mul).add(&lambda(&c.omega)) },
        h_mod: Bimodule {
            left: poly(&x.h_mod.left).add(&lambda(&c.mu)),
            right: poly(&x.h_mod.right).add(&lambda(&c.nu)),
        },
        f_map: poly(&x.f_map).add(&lambda(&c.psi)),
    };
    let mut z = Columns::new();
    for k in 0..n2 {
        let c = ok(XCochain2::from_flat(dims, &unit(n2, k)))?;
        z.push(&ok(check_crossed_module(&deform(&c)))?.coefficient_failures());
    }
    let dim_z = n2 - z.matrix().rank();
    let target = deform(&XCochain2::zero(dims));
    let nn = p * p + h * h;
    let mut b = Columns::new();
    for k in 0..n2 + nn {
        let c = if k < n2 { ok(XCochain2::from_flat(dims, &unit(n2, k)))? } else { XCochain2::zero(dims) };
        let flat = if k < n2 { vec![rat(0); nn] } else { unit(nn, k - n2) };
        let f0 = Tensor::<Poly>::identity(p).add(&lambda(&Tensor::from_data(&[p, p], flat[..p * p].to_vec())));
        let f1 = Tensor::<Poly>::identity(h).add(&lambda(&Tensor::from_data(&[h, h], flat[p * p..].to_vec())));
        b.push(&ok(check_xmod_homomorphism(&deform(&c), &target, &f0, &f1))?.coefficient_failures());
    }
    let kernel = b.matrix().kernel_basis();
    let projected: Vec<Vec<Rational>> = kernel.basis().iter().map(|v| v[..n2].to_vec()).collect();
    let dim_b = if projected.is_empty() { 0 } else { RationalMatrix::from_columns(n2, &projected).rank() };
    Ok((dim_z, dim_b))
}

fn c5_h2() -> Outcome {
    let z = fixtures::fix_z();
    let h = ok(second_cohomology(&z, &trivial_11(&z)))?;
    let pinned = (h.dim_z2(), h.dim_b2(), h.dim_h2());
    ensure!(pinned == (5, 0, 5), "FIX-Z/trivial gives {pinned:?}");
    let mut shown = Vec::new();
    for (name, g) in fixtures::algebras() {
        let h = ok(second_cohomology(&g, &adjoint_representation(&g)))?;
        let oracle = oracle_adjoint(&g)?;
        ensure!(
            (h.dim_z2(), h.dim_b2()) == oracle,
            "{name}/adjoint: (Z², B²) = {:?}, oracle {oracle:?}",
            (h.dim_z2(), h.dim_b2())
        );
        shown.push(format!("{name} {}", h.dim_h2()));
    }
    for (name, x) in fixtures::crossed_modules() {
        let h = ok(xmod_h2(&x, &xmod_adjoint(&x)))?;
        let oracle = oracle_xmod_adjoint(&x)?;
        ensure!(
            (h.dim_z2(), h.dim_b2()) == oracle,
            "{name}/adjoint: (Z², B²) = {:?}, oracle {oracle:?}",
            (h.dim_z2(), h.dim_b2())
        );
        shown.push(format!("{name} {}", h.dim_h2()));
    }
    Ok(format!("FIX-Z/trivial (5, 0, 5); adjoint H² matches the axiom oracle: {}", shown.join(", ")))
}

// ---------------------------------------------------------------- 6

fn sample_cochain(rng: &mut Rng64, i: usize, g: &TwoTermAlgebra) -> Cochain2 {
    let dims = adjoint_dims(g);
    match i % 5 {
        0 => random::cochain2(rng, dims, 0.5),
        1 => random::cochain2(rng, dims, 0.1),
        2 => {
            let h = second_cohomology(g, &adjoint_representation(g)).unwrap();
            random::cocycle(rng, &h)
        }
        3 => {
            let t = random::small_rational(rng);
            let n = NijenhuisCandidate::scalar(g.dim0(), g.dim1(), &t);
            nijenhuis_deformation(g, &n).unwrap().first_order
        }
        _ => Cochain2::zero(dims),
    }
}

fn sample_xcochain(rng: &mut Rng64, i: usize, x: &CrossedModule) -> XCochain2 {
    let dims = XCochainDims::of(x, &xmod_adjoint(x));
    match i % 5 {
        0 => random::xcochain2(rng, dims, 0.5),
        1 => random::xcochain2(rng, dims, 0.1),
        2 => random::xcocycle(rng, &xmod_h2(x, &xmod_adjoint(x)).unwrap()),
        3 => {
            let t = random::small_rational(rng);
            xmod_nijenhuis_deformation(x, &XNijenhuisCandidate::scalar(x.dim_p(), x.dim_h(), &t)).unwrap().first_order
        }
        _ => XCochain2::zero(dims),
    }
}

fn c6_generation() -> Outcome {
    let mut rng = random::rng(606);
    let lambdas = [rat(1), rat(2), rat(3)];
    let (mut total, mut yes) = (0, 0);
    for (name, g) in fixtures::algebras() {
        for i in 0..50 {
            let c = sample_cochain(&mut rng, i, &g);
            let p = ok(PolyStructure::new(g.clone(), c, None))?;
            let verdict = ok(check_generates(&p))?.generates();
            let mut specialized = true;
            for l in &lambdas {
                specialized &= ok(check_algebra(&p.specialize(l)))?.passed();
            }
            ensure!(verdict == specialized, "{name} sample {i}: polynomial {verdict}, specialized {specialized}");
            total += 1;
            yes += verdict as usize;
        }
    }
    let (mut xtotal, mut xyes) = (0, 0);
    for (name, x) in fixtures::crossed_modules() {
        for i in 0..50 {
            let c = sample_xcochain(&mut rng, i, &x);
            let p = ok(XPolyStructure::new(x.clone(), c))?;
            let verdict = ok(xmod_check_generates(&p))?.generates();
            let mut specialized = true;
            for l in &lambdas {
                specialized &= ok(check_crossed_module(&p.specialize(l)))?.passed();
            }
            ensure!(verdict == specialized, "{name} sample {i}: polynomial {verdict}, specialized {specialized}");
            xtotal += 1;
            xyes += verdict as usize;
        }
    }
    Ok(format!(
        "100% agreement: {total} 2-algebra cochains ({yes} generate), {xtotal} crossed-module cochains ({xyes} generate)"
    ))
}

// ---------------------------------------------------------------- 7

fn small_candidates(g: &TwoTermAlgebra, rng: &mut Rng64) -> Vec<NijenhuisCandidate> {
    let (a0, a1) = (g.dim0(), g.dim1());
    let mut out = vec![NijenhuisCandidate::scalar(a0, a1, &rat(1)), NijenhuisCandidate::zero(a0, a1)];
    if a0 == 1 && a1 == 1 {
        let v = |x: i64, s: &[usize]| Tensor::from_data(s, vec![rat(x)]);
        for n0 in -1..=2 {
            for n1 in -1..=2 {
                for n2 in -1..=1 {
                    out.push(NijenhuisCandidate { n0: v(n0, &[1, 1]), n1: v(n1, &[1, 1]), n2: v(n2, &[1, 1, 1]) });
                }
            }
        }
    } else {
        for _ in 0..30 {
            out.push(NijenhuisCandidate {
                n0: random::tensor(rng, &[a0, a0], 0.4),
                n1: random::tensor(rng, &[a1, a1], 0.4),
                n2: random::tensor(rng, &[a0, a0, a1], 0.3),
            });
        }
    }
    out
}

fn c7_nijenhuis() -> Outcome {
    let mut rng = random::rng(707);
    let (mut tried, mut passing) = (0, 0);
    for (name, g) in fixtures::algebras() {
        for (k, n) in small_candidates(&g, &mut rng).into_iter().enumerate() {
            let report = ok(check_nijenhuis(&g, &n))?;
            tried += 1;
            if k < 2 {
                ensure!(report.passed(), "{name}: {} fails {:?}", ["(id,id)", "(0,0)"][k], report.failed());
            }
            if !report.passed() {
                continue;
            }
            passing += 1;
            let p = ok(nijenhuis_deformation(&g, &n))?;
            ensure!(ok(check_trivializing(&p, &n))?.passed(), "{name}: candidate {k} does not trivialize");
            let res = ok(d2_residual(&g, &adjoint_representation(&g), &p.first_order))?;
            ensure!(res.is_zero(), "{name}: candidate {k} has first-order residual in {:?}", res.nonzero());
        }
    }
    let d = fixtures::fix_d();
    let n = NijenhuisCandidate { n1: Tensor::identity(1).scale(&rat(2)), ..NijenhuisCandidate::scalar(1, 1, &rat(1)) };
    let failed = ok(check_nijenhuis(&d, &n))?.failed().iter().map(|s| s.to_string()).collect::<Vec<_>>();
    ensure!(failed.iter().any(|c| c == "i"), "(id,2id) on FIX-D fails {failed:?}, expected i");

    let mut xpassing = 0;
    for (name, x) in fixtures::crossed_modules() {
        for t in [1, 0] {
            let n = XNijenhuisCandidate::scalar(x.dim_p(), x.dim_h(), &rat(t));
            ensure!(ok(xmod_check_nijenhuis(&x, &n))?.passed(), "{name}: scalar {t} fails");
            let p = ok(xmod_nijenhuis_deformation(&x, &n))?;
            ensure!(ok(xmod_check_trivializing(&p, &n))?.passed(), "{name}: scalar {t} does not trivialize");
            ensure!(ok(xmod_d2_residual(&x, &xmod_adjoint(&x), &p.first_order))?.is_zero(), "{name}: residual");
            xpassing += 1;
        }
    }
    Ok(format!(
        "{passing}/{tried} candidates pass and all trivialize with zero residual; (id,2id)/FIX-D fails i; {xpassing} crossed-module candidates"
    ))
}

// ---------------------------------------------------------------- 8

/// `s + inc∘k` for a random `k`, written directly on the kernel indices.
fn resplit(rng: &mut Rng64, s: &Tensor, sub: &[usize]) -> Tensor {
    let mut out = s.clone();
    let rows = s.shape()[0];
    for x in 0..rows {
        for &j in sub {
            let v = out.get(&[x, j]).clone() + random::small_rational(rng);
            out.set(&[x, j], v);
        }
    }
    out
}

fn c8_round_trip() -> Outcome {
    let mut rng = random::rng(808);
    let z = fixtures::fix_z();
    let u = fixtures::fix_u();
    let cases = [
        ("fix_z/trivial", z.clone(), trivial_11(&z)),
        ("fix_z/adjoint", z.clone(), adjoint_representation(&z)),
        ("fix_u/adjoint", u.clone(), adjoint_representation(&u)),
        ("fix_u/trivial", u.clone(), trivial_11(&u)),
    ];
    let mut trips = 0;
    let mut resplits = 0;
    for (name, g, r) in &cases {
        let h = ok(second_cohomology(g, r))?;
        for _ in 0..20 {
            let c = random::cocycle(&mut rng, &h);
            let e = ok(build_extension(g, r, &c))?;
            ensure!(&ok(extract_representation(&e))? == r, "{name}: representation does not round trip");
            ensure!(ok(extract_cocycle(&e))? == c, "{name}: cocycle does not round trip");
            trips += 1;
            let s0 = resplit(&mut rng, &e.s0, &e.sub0);
            let s1 = resplit(&mut rng, &e.s1, &e.sub1);
            let e2 = ok(e.with_splitting(s0, s1))?;
            let r2 = ok(extract_representation(&e2))?;
            ensure!(&r2 == r, "{name}: representation depends on the splitting");
            let c2 = ok(extract_cocycle(&e2))?;
            ensure!(ok(d2_residual(g, &r2, &c2))?.is_zero(), "{name}: resplit cocycle has nonzero residual");
            ensure!(ok(is_coboundary(g, r, &c2.sub(&c)))?.is_some(), "{name}: resplit changed the class");
            resplits += 1;
        }
    }
    let r22 = fixtures::fix_r22();
    let ad = adjoint_representation(&r22);
    let h = ok(second_cohomology(&r22, &ad))?;
    for _ in 0..5 {
        let c = random::cocycle(&mut rng, &h);
        let e = ok(build_extension(&r22, &ad, &c))?;
        ensure!(ok(extract_cocycle(&e))? == c, "fix_r22: cocycle does not round trip");
        let e2 = ok(e.with_splitting(resplit(&mut rng, &e.s0, &e.sub0), resplit(&mut rng, &e.s1, &e.sub1)))?;
        ensure!(ok(d2_residual(&r22, &ad, &ok(extract_cocycle(&e2))?))?.is_zero(), "fix_r22: resplit residual");
        trips += 1;
        resplits += 1;
    }
    Ok(format!("{trips} exact round trips; {resplits} non-canonical splittings give cocycles in the same class"))
}

// ---------------------------------------------------------------- 9

fn c9_classification() -> Outcome {
    let mut rng = random::rng(909);
    let z = fixtures::fix_z();
    let u = fixtures::fix_u();
    let r22 = fixtures::fix_r22();
    let cases = [
        ("fix_u/adjoint", u.clone(), adjoint_representation(&u)),
        ("fix_z/trivial", z.clone(), trivial_11(&z)),
        ("fix_r22/adjoint", r22.clone(), adjoint_representation(&r22)),
        ("fix_d/adjoint", fixtures::fix_d(), adjoint_representation(&fixtures::fix_d())),
    ];
    let mut equivalent = 0;
    for i in 0..20 {
        let (name, g, r) = &cases[i % cases.len()];
        let h = ok(second_cohomology(g, r))?;
        let c = random::cocycle(&mut rng, &h);
        let b = random::cochain1(&mut rng, CochainDims::of(g, r));
        let c2 = c.add(&ok(d1_apply(g, r, &b))?);
        let e1 = ok(build_extension(g, r, &c))?;
        let e2 = ok(build_extension(g, r, &c2))?;
        match ok(check_equivalence(&e1, &e2))? {
            Equivalence::Equivalent { map, .. } => {
                let rep = ok(check_homomorphism(&e1.total, &e2.total, &map))?;
                ensure!(rep.passed(), "{name}: witness map fails {:?}", rep.failed());
                equivalent += 1;
            }
            Equivalence::Inequivalent { .. } => return Err(format!("{name}: cohomologous pair reported inequivalent")),
        }
    }
    // B² = 0 for FIX-Z with the trivial representation (pinned above), so
    // distinct cocycles lie in distinct classes.
    let r = trivial_11(&z);
    let h = ok(second_cohomology(&z, &r))?;
    ensure!(h.dim_b2() == 0, "B² ≠ 0 on FIX-Z/trivial");
    let mut inequivalent = 0;
    while inequivalent < 10 {
        let (c1, c2) = (random::cocycle(&mut rng, &h), random::cocycle(&mut rng, &h));
        if c1 == c2 {
            continue;
        }
        let (e1, e2) = (ok(build_extension(&z, &r, &c1))?, ok(build_extension(&z, &r, &c2))?);
        match ok(check_equivalence(&e1, &e2))? {
            Equivalence::Inequivalent { rank_d1, rank_with_difference } => {
                ensure!(rank_with_difference > rank_d1, "inequivalence certificate does not raise the rank");
                inequivalent += 1;
            }
            Equivalence::Equivalent { .. } => return Err("H²-distinct pair reported equivalent".into()),
        }
    }
    let mut xequivalent = 0;
    for (name, x) in fixtures::crossed_modules() {
        let r = xmod_adjoint(&x);
        let h = ok(xmod_h2(&x, &r))?;
        for _ in 0..3 {
            let c = random::xcocycle(&mut rng, &h);
            let b = random::xcochain1(&mut rng, XCochainDims::of(&x, &r));
            let c2 = c.add(&ok(xmod_d1(&x, &r, &b))?);
            let e1 = ok(xmod_extension_build(&x, &r, &c))?;
            let e2 = ok(xmod_extension_build(&x, &r, &c2))?;
            match ok(xmod_check_equivalence(&e1, &e2))? {
                XEquivalence::Equivalent { f0, f1, .. } => {
                    ensure!(ok(check_xmod_homomorphism(&e1.total, &e2.total, &f0, &f1))?.passed(), "{name}: witness");
                    xequivalent += 1;
                }
                XEquivalence::Inequivalent { .. } => return Err(format!("{name}: cohomologous pair inequivalent")),
            }
        }
    }
    Ok(format!(
        "{equivalent} cohomologous pairs with verified witnesses, {inequivalent} H²-distinct pairs certified inequivalent, {xequivalent} crossed-module witnesses"
    ))
}

// ---------------------------------------------------------------- 10

fn c10_correspondence() -> Outcome {
    let mut strict: Vec<(String, TwoTermAlgebra)> =
        fixtures::algebras().into_iter().filter(|(_, g)| g.is_strict()).map(|(n, g)| (n.to_string(), g)).collect();
    strict.push(("fix_u+fix_d".into(), direct_sum(&fixtures::fix_u(), &fixtures::fix_d()).unwrap()));
    for (name, g) in &strict {
        let x = ok(from_strict(g))?;
        ensure!(ok(check_crossed_module(&x))?.passed(), "{name}: from_strict is not a crossed module");
        ensure!(&ok(to_strict(&x))? == g, "{name}: to_strict∘from_strict ≠ id");
    }
    let xs = fixtures::crossed_modules();
    for (name, x) in &xs {
        ensure!(&ok(from_strict(&ok(to_strict(x))?))? == x, "{name}: from_strict∘to_strict ≠ id");
        for (rn, r) in [("adjoint", xmod_adjoint(x)), ("zero", XModRepresentation::zero(x, 1, 2))] {
            let s = ok(semidirect_product(x, &r))?;
            let rep = ok(check_crossed_module(&s))?;
            ensure!(rep.passed(), "{name} ⋉ {rn} fails {:?}", rep.failed());
        }
    }
    Ok(format!(
        "{} strict algebras and {} crossed modules round trip; semidirect products pass",
        strict.len(),
        xs.len()
    ))
}

// ---------------------------------------------------------------- 11

fn c11_cli() -> Outcome {
    let cases = golden_cases();
    let mut counts = [0usize; 3];
    for case in &cases {
        let first = run_case(case, "json");
        ensure!(
            first.code == case.code,
            "{:?}: exit {} (expected {}): {}",
            case.args,
            first.code,
            case.code,
            first.stderr
        );
        let second = run_case(case, "json");
        ensure!(
            first.stdout == second.stdout && first.code == second.code,
            "{:?}: output differs between runs",
            case.args
        );
        if case.code == 2 {
            ensure!(first.stdout.is_empty() && !first.stderr.is_empty(), "{:?}: malformed input handling", case.args);
        }
        counts[case.code as usize] += 1;
    }
    Ok(format!(
        "{} golden cases ({} exit 0, {} exit 1, {} exit 2), JSON byte-identical across two runs",
        cases.len(),
        counts[0],
        counts[1],
        counts[2]
    ))
}

/// Criteria that cannot hold as stated; they print red but do not fail the
/// target as long as their own consistency checks hold.
const KNOWN_RED: &[usize] = &[2];

fn main() {
    let criteria: [Criterion; 11] = [
        ("Hochschild d∘d = 0", 5, c1_hochschild),
        ("2-algebra axiom checker and FIX-U mutations", 5, c2_mutations),
        ("adjoint soundness", 5, c3_adjoint),
        ("complex property d2·d1 = 0", 10, c4_complex),
        ("pinned H² and brute-force oracle", 10, c5_h2),
        ("generation iff specialization", 30, c6_generation),
        ("Nijenhuis operators", 10, c7_nijenhuis),
        ("extension round trip", 20, c8_round_trip),
        ("classification of extensions", 20, c9_classification),
        ("crossed-module correspondence and semidirect products", 5, c10_correspondence),
        ("CLI contract", 5, c11_cli),
    ];
    let lines: Vec<Line> =
        criteria.iter().enumerate().map(|(i, (title, limit, f))| run(i + 1, title, *limit, *f)).collect();
    let mut unexpected = Vec::new();
    for l in &lines {
        let status = if l.passed() { "PASS" } else { "FAIL" };
        let detail = match &l.outcome {
            Ok(d) | Err(d) => d,
        };
        println!(
            "[{status}] C{:<2} {} ({:.2}s, limit {}s): {detail}",
            l.id,
            l.title,
            l.elapsed.as_secs_f64(),
            l.limit.as_secs()
        );
        let known = KNOWN_RED.contains(&l.id) && l.outcome.as_ref().is_err_and(|e| e.starts_with("unattainable"));
        if !l.passed() && !known {
            unexpected.push(l.id);
        }
    }
    let green = lines.iter().filter(|l| l.passed()).count();
    println!("{green}/{} criteria pass", lines.len());
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
