mod common;

use cindep::families;
use cindep::structures::{
    closure, expand_global, meet_irreducibles, polymatroid_ci, satisfies_axiom, Axiom, Rule,
};
use cindep::{CIStatement, CIStructure, Polymatroid, Rational, VarSet};

fn st(i: usize, j: usize, k: &[usize]) -> CIStatement {
    CIStatement::new(i, j, VarSet::from_elems(k.iter().copied())).unwrap()
}

fn set(e: &[usize]) -> VarSet {
    VarSet::from_elems(e.iter().copied())
}

#[test]
fn expansion_examples() {
    let g = expand_global(set(&[0]), set(&[1, 2]), VarSet::EMPTY, 3).unwrap();
    let want: Vec<CIStatement> = vec![st(0, 1, &[]), st(0, 1, &[2]), st(0, 2, &[]), st(0, 2, &[1])];
    assert_eq!(g.into_iter().collect::<Vec<_>>(), want);
    let e = expand_global(set(&[0]), set(&[1]), set(&[2]), 4).unwrap();
    assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![st(0, 1, &[2])]);
}

#[test]
fn global_queries() {
    let full = CIStructure::full(3);
    assert!(full.holds_global(set(&[0]), set(&[1, 2]), VarSet::EMPTY).unwrap());
    let one = CIStructure::from_statements(3, [st(0, 1, &[])]).unwrap();
    assert!(!one.holds_global(set(&[0]), set(&[1, 2]), VarSet::EMPTY).unwrap());
    let grp = families::group_sum_family(2).unwrap().ci_structure();
    assert!(!grp.holds_global(set(&[0]), set(&[1, 2]), VarSet::EMPTY).unwrap());
}

#[test]
fn closure_examples() {
    let s = CIStructure::from_statements(3, [st(0, 1, &[]), st(0, 2, &[1])]).unwrap();
    let c = closure(&s, &[Rule::Semigraphoid]).unwrap();
    assert!(c.contains(&st(0, 2, &[])) && c.contains(&st(0, 1, &[2])));
    assert_eq!(c.len(), 4);

    let s = CIStructure::from_statements(3, [st(0, 1, &[]), st(0, 2, &[])]).unwrap();
    let c = closure(&s, &[Rule::Semigraphoid, Rule::Composition]).unwrap();
    assert!(c.contains(&st(0, 1, &[2])) && c.contains(&st(0, 2, &[1])));

    let empty = CIStructure::empty(4);
    assert_eq!(closure(&empty, &[Rule::Intersection, Rule::Composition]).unwrap(), empty);
    assert!(closure(&empty, &[Rule::WeakTransitivity]).is_err());
}

#[test]
fn group_family_witness() {
    let s = families::group_sum_family(2).unwrap().ci_structure();
    let v = satisfies_axiom(&s, Axiom::Composition);
    assert!(!v.holds);
    assert_eq!(v.witness.unwrap().instance.render(&["A", "X", "Y"]), "(A;X,Y|\u{2205})");
    for ax in Axiom::ALL {
        assert!(satisfies_axiom(&CIStructure::full(4), ax).holds, "{ax}");
    }
}

#[test]
fn extracted_structures_are_closed() {
    for seed in 0..60 {
        let s = common::random_distribution(seed).ci_structure();
        assert_eq!(closure(&s, &[Rule::Semigraphoid]).unwrap(), s, "seed {seed}");
    }
}

#[test]
fn polymatroid_structures_are_semigraphoids() {
    let q = |n: i64| Rational::from_integer(n.into());
    let mut pms = vec![
        Polymatroid::<Rational>::uniform_matroid(2, 4).unwrap(),
        Polymatroid::<Rational>::uniform_matroid(1, 3).unwrap(),
        Polymatroid::<Rational>::free_matroid(4).unwrap(),
    ];
    // entropy-like rank tables from random generator matrices over the rationals
    let mut r = common::rng(5);
    for _ in 0..10 {
        use rand::Rng;
        let gens: Vec<Vec<Vec<Rational>>> = (0..4)
            .map(|_| {
                (0..r.gen_range(1..=2))
                    .map(|_| (0..4).map(|_| q(r.gen_range(-1..=1))).collect())
                    .collect()
            })
            .collect();
        pms.push(Polymatroid::from_subspace_generators(&gens).unwrap());
    }
    for p in &pms {
        assert!(satisfies_axiom(&polymatroid_ci(p), Axiom::Semigraphoid).holds);
    }
}

#[test]
fn irreducibles_of_semigraphoid_lattice() {
    // semigraphoids on three elements are closed under intersection
    let family: Vec<CIStructure> = common::all_structures_n3()
        .into_iter()
        .filter(|s| satisfies_axiom(s, Axiom::Semigraphoid).holds)
        .collect();
    let irr = meet_irreducibles(&family).unwrap();
    assert!(!irr.is_empty());
    assert!(!irr.contains(&CIStructure::full(3)));
    // every member is an intersection of irreducibles and the top
    for s in &family {
        let above: Vec<&CIStructure> = irr.iter().filter(|t| s.is_subset(t)).collect();
        let meet = above.iter().fold(CIStructure::full(3), |acc, t| acc.intersection(t));
        assert_eq!(&meet, s);
    }
}
