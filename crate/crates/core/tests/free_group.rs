mod common;

use common::strategy;
use freebrace::terms::{Core, Letter, Word};
use proptest::prelude::*;

proptest! {
    #[test]
    fn reduce_is_idempotent(raw in strategy::raw(3, 14, 3)) {
        let once = Word::reduce(raw.clone());
        prop_assert!(Word::is_reduced(once.letters()));
        prop_assert_eq!(Word::reduce(once.letters().to_vec()), once);
    }

    #[test]
    fn reduce_agrees_with_naive_rewriting(raw in strategy::raw(2, 10, 2)) {
        // delete the leftmost cancelling pair until none is left
        let mut v = raw.clone();
        while let Some(i) = v.windows(2).position(|w| w[0].is_star_of(&w[1])) {
            v.drain(i..i + 2);
        }
        let reduced = Word::reduce(raw);
        prop_assert_eq!(reduced.letters(), &v[..]);
    }

    #[test]
    fn group_laws(
        a in strategy::word(3, 12, 3),
        b in strategy::word(3, 12, 3),
        c in strategy::word(3, 12, 3),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Word::identity()), a.clone());
        prop_assert_eq!(Word::identity().mul(&a), a.clone());
        prop_assert!(a.mul(&a.inv()).is_empty());
        prop_assert!(a.inv().mul(&a).is_empty());
        prop_assert_eq!(a.mul(&b).inv(), b.inv().mul(&a.inv()));
    }

    #[test]
    fn stratum_is_monotone(l in strategy::letter(3, 4)) {
        fn check(l: &Letter) -> bool {
            match l.core() {
                Core::Gen(_) => l.stratum() == 1,
                Core::Dot(a, b) | Core::Colon(a, b) => {
                    a.stratum() < l.stratum()
                        && b.stratum() < l.stratum()
                        && l.stratum() == 1 + a.stratum().max(b.stratum())
                        && check(a)
                        && check(b)
                }
            }
        }
        prop_assert!(check(&l));
        prop_assert_eq!(l.star().stratum(), l.stratum());
        prop_assert!(l.stratum() <= 4);
    }

    #[test]
    fn star_is_an_involution(l in strategy::letter(3, 3)) {
        prop_assert_eq!(l.star().star(), l.clone());
        prop_assert!(l.star().is_star_of(&l));
    }

    #[test]
    fn rendering_reparses(w in strategy::word(3, 8, 3)) {
        prop_assert_eq!(freebrace::parse_word(&w.to_string()).unwrap(), w);
    }
}
