//! Worked examples with known answers, one test per operation.

use umrow::matrix::MatrixR;
use umrow::mennicke::{first_row_orbit_test, mennicke, mennicke_equal, FirstRowTest, DEFAULT_GROUP_CAP};
use umrow::orbit::{orbit_bfs, same_orbit, Generators, OrbitConfig, SameOrbit};
use umrow::polyext::{
    bounded_unimodular_solve, completion_check, jacobson_radical, jacobson_reduce, parse_letters, poly_eval0,
    vdk_product_poly, CompletionVerdict, PolyRow,
};
use umrow::relative::relative_transitivity;
use umrow::ring::{lift_row, ExcisionMap};
use umrow::row::{e1, um_rel_member};
use umrow::symplectic::{compare_e_esp_orbits, is_symplectic, rel_esp_orbit, se_gen, sigma};
use umrow::vdk::{build_group_table, common_tail_reps, nice_check, sdim, sr, vdk_product, verify_ms_multiplicativity, NiceVerdict};
use umrow::word::ElementaryWord;
use umrow::{Error, Ideal, Ring};

fn z(n: u64) -> Ring {
    Ring::zmod(n).unwrap()
}

fn ex42() -> Ring {
    Ring::excision(&z(4), &[z(4).from_i64(2)]).unwrap()
}

#[test]
fn arithmetic() {
    let r = z(6);
    assert_eq!(r.format(&r.add(&r.from_i64(4), &r.from_i64(5))), "3");
    let ex = ex42();
    let p = ex.mul(&ex.parse("(1,2)").unwrap(), &ex.parse("(3,2)").unwrap());
    assert_eq!(ex.format(&p), "(3,0)");
    let a = ex.parse("(3,2)").unwrap();
    assert_eq!(ex.mul(&a, &ex.one()), a);
}

#[test]
fn units() {
    let r = z(6);
    assert_eq!(r.inverse(&r.from_i64(5)), Some(r.from_i64(5)));
    assert_eq!(r.inverse(&r.one()), Some(r.one()));
    assert_eq!(r.inverse(&r.from_i64(2)), None);
}

#[test]
fn unimodular_witnesses() {
    let r = z(6);
    let w = r.solve_unimodular(&r.parse_row("2,3").unwrap()).unwrap().unwrap();
    assert_eq!(r.format_row(&w), vec!["2", "5"]);
    assert_eq!(r.solve_unimodular(&e1(&r, 4)).unwrap(), Some(e1(&r, 4)));
    assert_eq!(r.solve_unimodular(&r.parse_row("2,4").unwrap()).unwrap(), None);
}

#[test]
fn relative_rows() {
    let r = z(4);
    let i = Ideal::new(&r, vec![r.from_i64(2)]);
    assert!(um_rel_member(&r, &r.parse_row("3,2,2").unwrap(), &i).unwrap());
    assert!(um_rel_member(&r, &e1(&r, 3), &i).unwrap());
    assert!(!um_rel_member(&r, &r.parse_row("3,1,0").unwrap(), &i).unwrap());
}

#[test]
fn excision_maps() {
    let ex = ex42();
    let base = z(4);
    assert_eq!(ExcisionMap::Omega.apply(&ex, &ex.parse("(3,2)").unwrap()).unwrap(), base.one());
    for x in base.elements().unwrap() {
        let g = ExcisionMap::Gamma.apply(&ex, x).unwrap();
        assert_eq!(&ExcisionMap::Omega.apply(&ex, &g).unwrap(), x);
    }
    let lifted = lift_row(&ex, &base.parse_row("3,2,2").unwrap()).unwrap();
    assert_eq!(ex.format_row(&lifted), vec!["(1,2)", "(0,2)", "(0,2)"]);
}

#[test]
fn enumeration() {
    assert_eq!(z(2).elements().unwrap().len(), 2);
    assert_eq!(ex42().elements().unwrap().len(), 8);
    assert_eq!(z(6).cardinality(), Some(6));
}

#[test]
fn elementary_matrices() {
    let r = z(4);
    let m = MatrixR::elementary(&r, 3, 1, 3, &r.from_i64(2)).unwrap();
    assert_eq!(r.format_row(&m.apply_row(&e1(&r, 3)).unwrap()), vec!["1", "0", "2"]);
    assert!(MatrixR::elementary(&r, 3, 1, 2, &r.zero()).unwrap().is_identity());
}

#[test]
fn acting_on_rows() {
    let r = Ring::parse_descriptor("F5[X]").unwrap();
    let v = r.parse_row("X, X+1, 0").unwrap();
    assert_eq!(ElementaryWord::empty(&r, 3).act(&v).unwrap(), v);
    let w = parse_letters(&r, 3, &[(1, 2, "-1"), (2, 1, "1-X"), (1, 2, "-1")]).unwrap();
    assert_eq!(w.act(&v).unwrap(), e1(&r, 3));
}

#[test]
fn orbits() {
    let r = z(2);
    let o = orbit_bfs(&r, &e1(&r, 2), &OrbitConfig::default()).unwrap();
    assert_eq!(o.sorted_members(), vec![r.parse_row("0,1").unwrap(), r.parse_row("1,0").unwrap(), r.parse_row("1,1").unwrap()]);
    let r4 = z(4);
    assert_eq!(orbit_bfs(&r4, &e1(&r4, 4), &OrbitConfig::default()).unwrap().len(), 240);
    let v = r4.parse_row("3,2,1").unwrap();
    let empty = OrbitConfig { generators: Generators::Empty, ..Default::default() };
    assert_eq!(orbit_bfs(&r4, &v, &empty).unwrap().members(), &[v]);
}

#[test]
fn orbit_decisions() {
    let r = z(6);
    let v = r.parse_row("5,2,3").unwrap();
    assert_eq!(same_orbit(&r, &v, &v, &OrbitConfig::default()).unwrap(), SameOrbit::Yes(ElementaryWord::empty(&r, 3)));
    let a = e1(&r, 3);
    let b = r.parse_row("0,0,1").unwrap();
    let SameOrbit::Yes(w) = same_orbit(&r, &a, &b, &OrbitConfig::default()).unwrap() else { panic!("one orbit") };
    assert_eq!(w.act(&a).unwrap(), b);
    let res = same_orbit(&r, &e1(&r, 2), &r.parse_row("0,2").unwrap(), &OrbitConfig::default()).unwrap();
    assert!(matches!(res, SameOrbit::No(_)));
}

#[test]
fn mennicke_symbols() {
    let f5 = Ring::prime_field(5).unwrap();
    let trivial = mennicke(&f5, &f5.one(), &f5.zero()).unwrap();
    assert!(trivial.matrix.is_identity());
    let ms = mennicke(&f5, &f5.from_i64(2), &f5.from_i64(3)).unwrap();
    assert!(f5.is_one(&ms.matrix.det()));
    assert_eq!(f5.format_row(&ms.matrix.row(0)), vec!["2", "3", "0"]);
    assert!(mennicke_equal(&ms, &ms, DEFAULT_GROUP_CAP).unwrap().is_yes());
    assert!(mennicke_equal(&ms, &trivial, DEFAULT_GROUP_CAP).unwrap().is_yes());
    let r = z(6);
    assert!(r.is_one(&mennicke(&r, &r.from_i64(5), &r.from_i64(2)).unwrap().matrix.det()));
}

#[test]
fn first_row_tests() {
    let r = z(4);
    let cfg = OrbitConfig::default();
    let id = MatrixR::identity(&r, 3);
    assert!(matches!(first_row_orbit_test(&id, None, &cfg).unwrap(), FirstRowTest::Yes(w) if w.is_empty()));
    let sigma_m = parse_letters(&r, 3, &[(1, 2, "1"), (2, 1, "4")]).unwrap().replay();
    assert!(matches!(first_row_orbit_test(&sigma_m, None, &cfg).unwrap(), FirstRowTest::Yes(_)));
    let r6 = z(6);
    let w = parse_letters(&r6, 3, &[(1, 3, "5"), (3, 2, "2"), (2, 1, "3")]).unwrap();
    assert!(matches!(first_row_orbit_test(&w.replay(), Some(&w), &cfg).unwrap(), FirstRowTest::Yes(_)));
}

#[test]
fn symplectic_examples() {
    assert_eq!(sigma(2, 4).unwrap(), 3);
    assert_eq!(sigma(2, 1).unwrap(), 2);
    let r = z(4);
    let one = r.one();
    let mut expect = MatrixR::identity(&r, 4);
    expect.set(0, 2, one.clone());
    expect.set(3, 1, r.neg(&one));
    let se13 = se_gen(&r, 2, 1, 3, &one).unwrap();
    assert_eq!(se13, expect);
    assert!(is_symplectic(&se13).unwrap());
    assert!(is_symplectic(&MatrixR::identity(&r, 4)).unwrap());
    assert!(!is_symplectic(&MatrixR::elementary(&r, 4, 1, 3, &one).unwrap()).unwrap());
    assert!(se_gen(&r, 2, 1, 2, &r.zero()).unwrap().is_identity());
}

#[test]
fn symplectic_orbits() {
    for (n, size) in [(2u64, 15usize), (4, 240)] {
        let r = z(n);
        let c = compare_e_esp_orbits(&r, 2, &e1(&r, 4), &Generators::Full).unwrap();
        assert!(c.equal);
        assert_eq!((c.e_size, c.esp_size), (size, size));
    }
    let r = z(4);
    let i = Ideal::new(&r, vec![r.from_i64(2)]);
    let o = rel_esp_orbit(&r, &e1(&r, 4), &i, 100_000, 2).unwrap();
    assert!(o.certificate(0).is_empty());
    let o = rel_esp_orbit(&r, &r.parse_row("3,2,2,2").unwrap(), &i, 100_000, 2).unwrap();
    assert!(o.contains(&e1(&r, 4)) && o.subset_mode);
}

#[test]
fn stable_ranges() {
    assert_eq!((sr(&z(6)).unwrap(), sdim(&z(6)).unwrap()), (1, 0));
    assert_eq!(sr(&Ring::prime_field(2).unwrap()).unwrap(), 1);
}

#[test]
fn products_and_niceness() {
    let r = z(6);
    let cfg = OrbitConfig::default();
    let v = r.parse_row("5,2,3").unwrap();
    let w = r.parse_row("1,2,3").unwrap();
    assert_eq!(r.format_row(&vdk_product(&r, &v, &w).unwrap().row), vec!["4", "4", "3"]);
    let res = nice_check(&r, &v, &w, &cfg).unwrap();
    assert!(matches!(res.verdict, NiceVerdict::Nice(_)));

    let u = r.from_i64(5);
    let unit_row = vec![u.clone(), r.zero(), r.zero()];
    assert_eq!(vdk_product(&r, &e1(&r, 3), &unit_row).unwrap().row, unit_row);

    let ct = common_tail_reps(&r, &e1(&r, 3), &v, &cfg).unwrap();
    assert_eq!(ct.v_cert.act(&e1(&r, 3)).unwrap(), ct.v_rep);
    assert_eq!(ct.w_cert.act(&v).unwrap(), ct.w_rep);
    assert_eq!(vdk_product(&r, &v, &r.parse_row("1,2,2").unwrap()), Err(Error::TailMismatch));
}

#[test]
fn group_tables() {
    for ring in [z(2), z(6), ex42()] {
        let t = build_group_table(&ring, 3, &OrbitConfig::default()).unwrap();
        assert_eq!(t.class_count(), 1);
        assert_eq!(t.group_name(), "trivial");
    }
    let t = build_group_table(&z(6), 3, &OrbitConfig::default()).unwrap();
    let r = z(6);
    let rep = verify_ms_multiplicativity(&t, &r.from_i64(5), &r.from_i64(5), &r.from_i64(2), &[r.from_i64(3)]).unwrap();
    assert!(rep.holds);
}

#[test]
fn relative_transitivity_examples() {
    let r = z(4);
    let i = Ideal::new(&r, vec![r.from_i64(2)]);
    let cfg = OrbitConfig::default();
    assert!(relative_transitivity(&r, &e1(&r, 3), &i, &cfg).unwrap().word.is_empty());
    let v = r.parse_row("3,2,2").unwrap();
    let res = relative_transitivity(&r, &v, &i, &cfg).unwrap();
    assert_eq!(res.word.act(&v).unwrap(), e1(&r, 3));
    assert!(res.word.replay().congruent_to_identity(&i).unwrap());
    let r6 = z(6);
    let i3 = Ideal::new(&r6, vec![r6.from_i64(3)]);
    let v = r6.parse_row("4,3,0").unwrap();
    assert_eq!(relative_transitivity(&r6, &v, &i3, &cfg).unwrap().word.act(&v).unwrap(), e1(&r6, 3));
}

#[test]
fn polynomial_rows() {
    let f5x = Ring::parse_descriptor("F5[X]").unwrap();
    let v = PolyRow::parse(&f5x, "X, X+1, 0").unwrap();
    assert_eq!(poly_eval0(&v).unwrap().to_strings(), vec!["0", "1", "0"]);
    let w = bounded_unimodular_solve(&v, 0).unwrap().unwrap();
    assert_eq!(f5x.format_row(&w), vec!["4", "1", "0"]);
    let e = PolyRow::new(&f5x, e1(&f5x, 3)).unwrap();
    for d in 0..3 {
        assert_eq!(bounded_unimodular_solve(&e, d).unwrap(), Some(e1(&f5x, 3)));
    }

    let z4x = Ring::parse_descriptor("Z/4[X]").unwrap();
    let c = PolyRow::parse(&z4x, "1+2*X, 2*X, 2").unwrap();
    assert_eq!(poly_eval0(&c).unwrap().to_strings(), vec!["1", "0", "2"]);
    assert_eq!(bounded_unimodular_solve(&PolyRow::parse(&z4x, "X, 2").unwrap(), 1).unwrap(), None);
    let v = PolyRow::parse(&z4x, "1+2*X, 2*X, 3").unwrap();
    let w = PolyRow::parse(&z4x, "1, 2*X, 3").unwrap();
    let p = vdk_product_poly(&v, &w, 2).unwrap();
    assert!(z4x.is_one(&z4x.dot(&p.row, &p.witness)));
}

#[test]
fn jacobson() {
    assert_eq!(jacobson_radical(&z(4)).unwrap().to_string(), "(2)");
    assert_eq!(jacobson_radical(&Ring::prime_field(5).unwrap()).unwrap().to_string(), "(0)");
    let r = z(4);
    let v = r.parse_row("3,2,2").unwrap();
    let red = jacobson_reduce(&r, &v, &OrbitConfig::default()).unwrap();
    assert_eq!(red.word.act(&v).unwrap(), e1(&r, 3));
}

#[test]
fn completion() {
    let r = Ring::parse_descriptor("F5[X]").unwrap();
    let cfg = OrbitConfig::default();
    let c = PolyRow::parse(&r, "2, 0, 1").unwrap();
    assert!(matches!(completion_check(&c, None, &cfg).unwrap().verdict, CompletionVerdict::Completable { .. }));
    let v = PolyRow::parse(&r, "X, X+1, 0").unwrap();
    let cert = parse_letters(&r, 3, &[(1, 2, "-1"), (2, 1, "1-X"), (1, 2, "-1")]).unwrap();
    assert!(matches!(completion_check(&v, Some(&cert), &cfg).unwrap().verdict, CompletionVerdict::Completable { .. }));
    assert!(matches!(completion_check(&v, None, &cfg).unwrap().verdict, CompletionVerdict::Unknown(_)));
}
