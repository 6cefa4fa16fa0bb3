use barytop_cli::expr::{parse, SpaceExpr, MAX_GENUS, MAX_SPHERE_DIM, MAX_WEIGHT};
use proptest::prelude::*;

fn expr() -> impl Strategy<Value = SpaceExpr> {
    let leaf = prop_oneof![
        (1..=MAX_SPHERE_DIM).prop_map(SpaceExpr::Sphere),
        Just(SpaceExpr::Point),
        Just(SpaceExpr::Rp2),
        Just(SpaceExpr::Torus),
        (0..=MAX_GENUS).prop_map(SpaceExpr::Surface),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = |e| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SpaceExpr::Wedge(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SpaceExpr::Product(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SpaceExpr::Smash(b(x), b(y))),
            inner.clone().prop_map(move |x| SpaceExpr::Suspension(b(x))),
            inner.clone().prop_map(move |x| SpaceExpr::SymJoin2(b(x))),
            (1..=MAX_WEIGHT, inner.clone()).prop_map(move |(n, x)| SpaceExpr::SymmetricProduct(n, b(x))),
            (1..=MAX_WEIGHT, inner.clone()).prop_map(move |(n, x)| SpaceExpr::ReducedSymmetricProduct(n, b(x))),
            (1..=MAX_WEIGHT, inner).prop_map(move |(n, x)| SpaceExpr::Barycenter(n, b(x))),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_the_identity(e in expr()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn whitespace_is_insignificant(e in expr()) {
        let spaced = e.to_string().replace('(', " ( ").replace(',', " , ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }

    #[test]
    fn parser_never_panics(s in "[a-zA-Z0-9(), -]{0,40}") {
        if let Err(err) = parse(&s) {
            prop_assert!(err.offset <= s.len());
        }
    }
}
