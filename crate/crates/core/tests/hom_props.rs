mod common;

use std::sync::Arc;

use common::{gen, strategy};
use freebrace::braces::{enumerate_braces, BraceTable};
use freebrace::hom::{all_maps, GeneratorMap};
use freebrace::quotient::brace_equation_sides;
use freebrace::{act_colon, act_dot, Word};
use proptest::prelude::*;

fn targets(max_order: usize) -> Vec<Arc<BraceTable>> {
    (1..=max_order)
        .flat_map(|n| enumerate_braces(n, false).unwrap())
        .map(Arc::new)
        .collect()
}

fn symbols() -> Vec<String> {
    ["x", "y", "z"].map(String::from).to_vec()
}

fn maps(max_order: usize) -> Vec<GeneratorMap> {
    targets(max_order)
        .iter()
        .flat_map(|t| all_maps(t, &symbols()).collect::<Vec<_>>())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_a_group_homomorphism(a in strategy::word(3, 6, 3), b in strategy::word(3, 6, 3)) {
        for f in maps(4) {
            let t = f.target();
            let (fa, fb) = (f.eval_word(&a).unwrap(), f.eval_word(&b).unwrap());
            prop_assert_eq!(f.eval_word(&a.mul(&b)).unwrap(), t.circ(fa, fb));
            prop_assert_eq!(f.eval_word(&a.inv()).unwrap(), t.inv(fa));
        }
    }

    #[test]
    fn evaluation_respects_both_actions(a in strategy::word(3, 6, 3), b in strategy::word(3, 6, 3)) {
        for f in maps(4) {
            prop_assert!(f.check_hom_action_compat(&a, &b).unwrap().is_agree());
        }
    }

    #[test]
    fn images_satisfy_the_brace_equation(a in strategy::word(2, 5, 3), b in strategy::word(2, 5, 3)) {
        let (lhs, rhs) = brace_equation_sides(&a, &b);
        for f in maps(4) {
            prop_assert_eq!(f.eval_word(&lhs).unwrap(), f.eval_word(&rhs).unwrap());
        }
    }

    #[test]
    fn images_forget_the_free_group_gap(x in strategy::letter(3, 3), g in strategy::word(3, 5, 3)) {
        // x' . (x . g) differs from g in the free group but not in any image
        let xw = Word::letter(x);
        let back = act_dot(&xw.inv(), &act_dot(&xw, &g));
        let back_colon = act_colon(&xw.inv(), &act_colon(&xw, &g));
        for f in maps(3) {
            prop_assert_eq!(f.eval_word(&back).unwrap(), f.eval_word(&g).unwrap());
            prop_assert_eq!(f.eval_word(&back_colon).unwrap(), f.eval_word(&g).unwrap());
        }
    }
}

#[test]
fn factorization_through_generators() {
    for f in maps(4) {
        for s in ["x", "y", "z"] {
            assert_eq!(f.eval_word(&Word::letter(gen(s))).unwrap(), f.get(s).unwrap());
        }
    }
}

#[test]
fn two_evaluators_agreeing_on_generators_agree_everywhere() {
    // a second evaluator built independently: map each letter through a
    // memo-free recursion that multiplies inverses explicitly
    fn eval(f: &GeneratorMap, w: &Word) -> usize {
        use freebrace::terms::Core;
        fn letter(f: &GeneratorMap, l: &freebrace::Letter) -> usize {
            let t = f.target();
            let v = match l.core() {
                Core::Gen(s) => f.get(s).unwrap(),
                Core::Dot(a, b) => t.dot(letter(f, a), letter(f, b)),
                Core::Colon(a, b) => t.colon(letter(f, a), letter(f, b)),
            };
            if l.is_positive() {
                v
            } else {
                (0..t.order()).find(|&u| t.circ(v, u) == 0).unwrap()
            }
        }
        w.letters()
            .iter()
            .fold(0, |acc, l| f.target().circ(acc, letter(f, l)))
    }
    let mut rng = common::rng(11);
    for _ in 0..50 {
        let w = common::word(&mut rng, 3, 6, 3);
        for f in maps(3) {
            assert_eq!(f.eval_word(&w).unwrap(), eval(&f, &w));
        }
    }
}
