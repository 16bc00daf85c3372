//! Shape checks on the built-in catalog.

use liesym::expr::x;
use liesym::harness::CATALOG;
use liesym::symmetry::Subclass;

#[test]
fn entry_ids_are_unique_and_content_derived() {
    let mut ids: Vec<&str> = CATALOG.entries.iter().map(|e| e.id.as_str()).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n, "duplicate catalog ids");
    for e in &CATALOG.entries {
        assert!(e.id.contains("f="), "{}", e.id);
        assert!(e.id.contains(";g="), "{}", e.id);
    }
}

#[test]
fn expected_counts() {
    assert_eq!(CATALOG.entries.len(), 26);
    let fields: usize = CATALOG.entries.iter().map(|e| e.fields.len()).sum();
    assert_eq!(fields, 112);
    assert_eq!(CATALOG.reductions.len(), 14);
    assert_eq!(CATALOG.edges.len(), 7);
    assert_eq!(CATALOG.signatures.len(), 19);
    let crossed = CATALOG.entries.iter().filter(|e| e.crossed_out).count();
    assert_eq!(crossed, 2);
    let regular_extensions = CATALOG
        .entries
        .iter()
        .filter(|e| e.subclass == Subclass::C && e.fields.len() > 2)
        .count();
    assert_eq!(regular_extensions, 11);
}

#[test]
fn named_rows_are_present() {
    // the slow-diffusion row carries four fields including the exponential one
    let entry = CATALOG
        .entries
        .iter()
        .find(|e| e.member.f == x("(u_x+1)^-1") && e.member.g == x("eps*u"))
        .expect("slow-diffusion row");
    assert_eq!(entry.fields.len(), 4);
    assert!(entry
        .fields
        .iter()
        .any(|q| q.tau == x("exp(eps*t)") && q.eta == x("eps*exp(eps*t)*(u+x)")));

    // the arctan filtration row carries m t d_t + u d_x - x d_u
    let entry = CATALOG
        .entries
        .iter()
        .find(|e| e.member.f == x("exp(m*arctan(u_x))*(u_x^2+1)^-1"))
        .expect("arctan row");
    assert!(entry
        .fields
        .iter()
        .any(|q| q.tau == x("m*t") && q.xi == x("u") && q.eta == x("-x")));

    // the linearizable row with opaque g carries the h~(t, u) d_x field with
    // its side relation
    let entry = CATALOG
        .entries
        .iter()
        .find(|e| e.subclass == Subclass::L && e.member.g == x("g(u)"))
        .expect("linearizable row");
    assert!(entry.fields.iter().any(|q| q.xi == x("ht(t,u)")));
    assert_eq!(entry.side_relations.len(), 1);
    assert_eq!(entry.side_relations[0].head, "ht");
}

#[test]
fn side_relation_rows_cover_both_shapes() {
    let heat_like = CATALOG
        .entries
        .iter()
        .filter(|e| e.side_relations.iter().any(|r| r.head == "h"))
        .count();
    let kolmogorov_like = CATALOG
        .entries
        .iter()
        .filter(|e| e.side_relations.iter().any(|r| r.head == "ht"))
        .count();
    assert_eq!(heat_like, 3, "heat-type relations (plain, +eps h, constant-source)");
    assert_eq!(kolmogorov_like, 4, "drift relations on the linearizable block");
}
