use braidknot::braid::BraidWord;
use braidknot::cli::parse_braid_text;
use proptest::prelude::*;

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
            let letters = v
                .into_iter()
                .map(|(i, pos)| if pos { i } else { -i })
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

fn same_strands(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = n as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let letters = v
            .into_iter()
            .map(|(i, pos)| if pos { i } else { -i })
            .collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (2usize..=6).prop_flat_map(|n| {
        (
            same_strands(n, 10),
            same_strands(n, 10),
            same_strands(n, 10),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn compose_is_associative((a, b, c) in triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn empty_word_is_identity(w in word(6, 12)) {
        let e = BraidWord::trivial(w.strands());
        prop_assert_eq!(&e.compose(&w).unwrap(), &w);
        prop_assert_eq!(&w.compose(&e).unwrap(), &w);
    }

    #[test]
    fn involutions(w in word(6, 12)) {
        prop_assert_eq!(&w.inverse().inverse(), &w);
        prop_assert_eq!(&w.flip().flip(), &w);
        prop_assert_eq!(&w.mirror().mirror(), &w);
        prop_assert_eq!(&w.reverse().reverse(), &w);
        prop_assert!(w.compose(&w.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn permutation_is_an_antihomomorphism((a, b, _) in triple()) {
        // the first word acts first
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.permutation(), b.permutation().compose(&a.permutation()));
        prop_assert_eq!(
            a.inverse().permutation().compose(&a.permutation()),
            BraidWord::trivial(a.strands()).permutation()
        );
    }

    #[test]
    fn exponent_sums((a, b, _) in triple()) {
        prop_assert_eq!(
            a.compose(&b).unwrap().exponent_sum(),
            a.exponent_sum() + b.exponent_sum()
        );
        prop_assert_eq!(a.inverse().exponent_sum(), -a.exponent_sum());
        prop_assert_eq!(a.mirror().exponent_sum(), -a.exponent_sum());
    }

    #[test]
    fn parse_format_round_trip(w in word(9, 20)) {
        prop_assert_eq!(parse_braid_text(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn format_parse_normalizes_whitespace(w in word(9, 20), seps in prop::collection::vec("[ \t\n]{1,3}", 21)) {
        let mut text = format!("{}:", w.strands());
        for (e, sep) in w.letters().iter().zip(&seps) {
            text.push_str(sep);
            text.push_str(&e.to_string());
        }
        text.push_str(&seps[20]);
        prop_assert_eq!(parse_braid_text(&text).unwrap().to_string(), w.to_string());
    }
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse_braid_text("3: 1\n  2 x").unwrap_err();
    assert_eq!((e.line, e.column), (2, 5));
    let e = parse_braid_text("three: 1").unwrap_err();
    assert_eq!((e.line, e.column), (1, 1));
    assert!(parse_braid_text("3 1 2").is_err());
    assert!(parse_braid_text("").is_err());
}
