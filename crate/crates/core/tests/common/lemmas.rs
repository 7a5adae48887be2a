//! Per-instance checks of the bumping lemma, shared by the property suites
//! and the acceptance runner.

use hookkron::pictures::{check_remmel_whitney, picture_to_rw, row_rw_tableau, rw_to_picture};
use hookkron::tableaux::row_reading;
use hookkron::{Cell, PartialTableau, Picture};

use super::{random_reading, TestRng};

fn lt_sw(a: Cell, b: Cell) -> bool {
    a.lt_sw(b)
}

/// Checks parts (1)–(6) and both round trips on one tableau; returns the
/// number of individual assertions made.
pub fn check_tableau(t: &PartialTableau, extra: &[u32]) -> usize {
    let mut checks = 0;
    let shape = t.shape();
    let fresh: Vec<u32> = extra.iter().copied().filter(|a| !t.contains_value(*a)).collect();
    let dest: Vec<(u32, Cell)> = fresh.iter().map(|&a| (a, t.bump_destination(a).unwrap())).collect();
    let removable = t.removable_corners();
    let outputs: Vec<(Cell, u32)> = removable.iter().map(|&v| (v, t.delete(v).unwrap().1)).collect();

    // (1)
    for &(a, u) in &dest {
        for &(a2, u2) in &dest {
            if a <= a2 {
                assert!(u.leq_sw(u2), "(1) {a}->{u}, {a2}->{u2}\n{t}");
                checks += 1;
            }
        }
    }
    // (2)
    for &(v, b) in &outputs {
        for &(v2, b2) in &outputs {
            if v.leq_sw(v2) {
                assert!(b <= b2, "(2) {v}->{b}, {v2}->{b2}\n{t}");
                checks += 1;
            }
        }
    }
    // (3) and the insertion round trip
    for &(a, u) in &dest {
        if u.is_extreme() {
            assert!(!t.is_addable(a));
            continue;
        }
        let e = t.insert(a).unwrap();
        assert_eq!(e.shape(), &shape.grow_inward(u).unwrap());
        let (back, b) = e.delete(u).unwrap();
        assert_eq!((&back, b), (t, a), "insert/delete round trip at {a}");
        checks += 1;
        for &a2 in &fresh {
            if a2 == a {
                continue;
            }
            let u2 = e.bump_destination(a2).unwrap();
            if a < a2 {
                assert!(lt_sw(u, u2), "(3) {a}->{u} then {a2}->{u2}\n{t}");
            } else {
                assert!(lt_sw(u2, u), "(3) {a}->{u} then {a2}->{u2}\n{t}");
            }
            checks += 1;
        }
    }
    // (4) and the deletion round trip
    for &(v, b) in &outputs {
        let (f, _) = t.delete(v).unwrap();
        let (e, route) = f.insert_with_route(b).unwrap();
        assert_eq!(route.destination(), v);
        assert_eq!(&e, t, "delete/insert round trip at {v}");
        checks += 1;
        for v2 in f.removable_corners() {
            let b2 = f.delete(v2).unwrap().1;
            if lt_sw(v, v2) {
                assert!(b < b2, "(4) {v}->{b} then {v2}->{b2}\n{t}");
                checks += 1;
            } else if lt_sw(v2, v) {
                assert!(b2 < b, "(4) {v}->{b} then {v2}->{b2}\n{t}");
                checks += 1;
            }
        }
    }
    // (5) and (6)
    for &(a, u) in &dest {
        for &(v, b) in &outputs {
            if lt_sw(u, v) {
                assert!(a < b, "(5) {a}->{u}, {v}->{b}\n{t}");
                checks += 1;
            }
        }
        // cocorners of η that are cells of ν/η; the others cannot be removable
        for v in shape.inner_corners() {
            if !lt_sw(v, u) {
                continue;
            }
            assert!(t.is_removable(v), "(6) {v} <↙ {u} = dest({a}) but not removable\n{t}");
            let b = t.delete(v).unwrap().1;
            assert!(b < a, "(6) {v}->{b}, {a}->{u}\n{t}");
            checks += 1;
        }
    }
    checks
}

pub fn check_picture(pic: &Picture) -> usize {
    let mut checks = 0;
    let target = pic.target();
    let zs = target.icc_bar();
    let dest: Vec<(Cell, Cell)> = zs.iter().map(|&z| (z, pic.bump_destination(z).unwrap())).collect();
    let outputs: Vec<(Cell, Cell)> =
        pic.removable_corners().into_iter().map(|v| (v, pic.delete(v).unwrap().1)).collect();

    // (1)
    for &(z, u) in &dest {
        for &(z2, u2) in &dest {
            if z.leq_sw(z2) {
                assert!(u.leq_sw(u2), "(1) {z}->{u}, {z2}->{u2}\n{pic}");
                checks += 1;
            }
        }
    }
    // (2)
    for &(v, w) in &outputs {
        assert!(target.is_inner_corner(w));
        for &(v2, w2) in &outputs {
            if v.leq_sw(v2) {
                assert!(w.leq_sw(w2), "(2) {v}->{w}, {v2}->{w2}\n{pic}");
                checks += 1;
            }
        }
    }
    // (3) and the insertion round trip
    for &(z, u) in &dest {
        if z.is_extreme() || u.is_extreme() {
            assert!(!pic.is_addable(z));
            continue;
        }
        let e = pic.insert(z).unwrap();
        assert_eq!(e.source(), &pic.source().grow_inward(u).unwrap());
        assert_eq!(e.target(), &target.grow_inward(z).unwrap());
        let (back, w) = e.delete(u).unwrap();
        assert_eq!((&back, w), (pic, z), "insert/delete round trip at {z}");
        checks += 1;
        for z2 in e.target().inner_cocorners() {
            let u2 = e.bump_destination(z2).unwrap();
            if z.lt_sw(z2) {
                assert!(u.lt_sw(u2), "(3) {z}->{u} then {z2}->{u2}\n{pic}");
                checks += 1;
            } else if z2.lt_sw(z) {
                assert!(u2.lt_sw(u), "(3) {z}->{u} then {z2}->{u2}\n{pic}");
                checks += 1;
            }
        }
    }
    // (4) and the deletion round trip
    for &(v, w) in &outputs {
        let (f, _) = pic.delete(v).unwrap();
        assert_eq!(f.bump_destination(w).unwrap(), v);
        assert_eq!(&f.insert(w).unwrap(), pic, "delete/insert round trip at {v}");
        checks += 1;
        for v2 in f.removable_corners() {
            let w2 = f.delete(v2).unwrap().1;
            if v.lt_sw(v2) {
                assert!(w.lt_sw(w2), "(4) {v}->{w} then {v2}->{w2}\n{pic}");
                checks += 1;
            } else if v2.lt_sw(v) {
                assert!(w2.lt_sw(w), "(4) {v}->{w} then {v2}->{w2}\n{pic}");
                checks += 1;
            }
        }
    }
    // (5) and (6)
    for &(z, u) in &dest {
        for &(v, w) in &outputs {
            if u.lt_sw(v) {
                assert!(z.lt_sw(w), "(5) {z}->{u}, {v}->{w}\n{pic}");
                checks += 1;
            }
        }
        for v in pic.source().inner_corners() {
            if !v.lt_sw(u) {
                continue;
            }
            assert!(pic.is_removable(v), "(6) {v} <↙ {u} = dest({z}) but not removable\n{pic}");
            let w = pic.delete(v).unwrap().1;
            assert!(w.lt_sw(z), "(6) {v}->{w}, {z}->{u}\n{pic}");
            checks += 1;
        }
    }
    checks
}

/// Transports every insertion and deletion through a random reading and
/// compares with the picture operation.
pub fn check_route_independence(rng: &mut TestRng, pic: &Picture) -> usize {
    let mut checks = 0;
    let target = pic.target();
    let mut cells = target.cells();
    for z in target.icc_bar() {
        cells.push(z);
        let r = random_reading(rng, &cells);
        cells.pop();
        let t = picture_to_rw(pic, &r).unwrap();
        let a = r.get(z).unwrap();
        let route = t.bump_route(a).unwrap();
        assert_eq!(route.destination(), pic.bump_destination(z).unwrap(), "{z}\n{pic}");
        let pic_route = pic.bump_route(z).unwrap();
        assert_eq!(route.cells, pic_route.cells);
        let displaced: Vec<u32> = pic_route.displaced.iter().map(|&y| r.get(y).unwrap()).collect();
        assert_eq!(route.displaced, displaced);
        if pic.is_addable(z) {
            let e = pic.insert(z).unwrap();
            assert_eq!(picture_to_rw(&e, &r).unwrap(), t.insert(a).unwrap());
        }
        checks += 1;
    }
    let r = random_reading(rng, &target.cells());
    let t = picture_to_rw(pic, &r).unwrap();
    for v in pic.removable_corners() {
        let (f, w) = pic.delete(v).unwrap();
        let (tf, b) = t.delete(v).unwrap();
        assert_eq!(r.get(w), Some(b));
        assert_eq!(picture_to_rw(&f, &r.restrict(f.target())).unwrap(), tf);
        checks += 1;
    }
    for v in pic.source().inner_corners() {
        assert_eq!(pic.is_removable(v), t.is_removable(v), "{v}\n{pic}");
    }
    checks
}

pub fn check_rw_roundtrip(rng: &mut TestRng, pic: &Picture) {
    let target = pic.target();
    let row = row_reading(target);
    let t = row_rw_tableau(pic);
    assert_eq!(&rw_to_picture(&t, target, &row).unwrap(), pic);
    let r = random_reading(rng, &target.cells());
    let t = picture_to_rw(pic, &r).unwrap();
    check_remmel_whitney(&t, target, &r).unwrap();
    assert_eq!(&rw_to_picture(&t, target, &r).unwrap(), pic);
}

