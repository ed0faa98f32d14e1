use bilateral_dyck::decompose::{crossing_factorize, factor_classes, phi_parse, psi_parse};
use bilateral_dyck::stats::{
    contacts, crossings, downs_at_even_height, downs_at_odd_height, peaks, stat_record,
    ups_at_even_height, ups_at_odd_height, valleys,
};
use bilateral_dyck::{alpha, beta, phi, phi_ext, psi, psi_ext, PathClass, PathWord, Step};
use proptest::prelude::*;

/// Any U/D string of length up to `max`.
fn any_text(max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::bool::ANY, 0..=max)
        .prop_map(|v| v.into_iter().map(|up| if up { 'U' } else { 'D' }).collect())
}

/// A Dyck word of semilength `0..=max_n`, steered by random bits.
fn dyck(max_n: usize) -> impl Strategy<Value = PathWord> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::bool::ANY, 2 * n)))
        .prop_map(|(n, bits)| {
            let (mut h, mut ups) = (0usize, 0usize);
            let steps = bits.into_iter().map(|b| {
                let up = if h == 0 {
                    true
                } else if ups == n {
                    false
                } else {
                    b
                };
                if up {
                    h += 1;
                    ups += 1;
                    Step::Up
                } else {
                    h -= 1;
                    Step::Down
                }
            });
            PathWord::from_steps(steps.collect::<Vec<_>>())
        })
}

/// A balanced word of semilength `0..=max_n`.
fn bilateral(max_n: usize) -> impl Strategy<Value = PathWord> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let mut v = vec![Step::Up; n];
            v.extend(vec![Step::Down; n]);
            Just(v).prop_shuffle()
        })
        .prop_map(PathWord::from_steps)
}

/// Vertex heights from the text form.
fn heights(w: &str) -> Vec<i64> {
    let mut h = vec![0i64];
    for c in w.chars() {
        let last = *h.last().unwrap();
        h.push(if c == 'U' { last + 1 } else { last - 1 });
    }
    h
}

/// `(is_up, step height)` per step.
fn scan(w: &str) -> Vec<(bool, i64)> {
    let h = heights(w);
    w.chars()
        .enumerate()
        .map(|(i, c)| (c == 'U', h[i].max(h[i + 1])))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn text_round_trips(text in any_text(24)) {
        let w: PathWord = text.parse().unwrap();
        prop_assert_eq!(w.to_string(), text.clone());
        prop_assert_eq!(w.len(), text.len());
        let lower: PathWord = text.to_lowercase().parse().unwrap();
        prop_assert_eq!(lower, w);
    }

    #[test]
    fn classify_matches_scan(text in any_text(24)) {
        let h = heights(&text);
        let last = *h.last().unwrap();
        let min = *h.iter().min().unwrap();
        let max = *h.iter().max().unwrap();
        let expected = if text.is_empty() {
            PathClass::Empty
        } else if last != 0 {
            PathClass::NotClosed
        } else if min == 0 {
            PathClass::Dyck
        } else if max == 0 {
            PathClass::NegativeDyck
        } else {
            PathClass::BilateralProper
        };
        let w: PathWord = text.parse().unwrap();
        prop_assert_eq!(w.classify(), expected);
        prop_assert_eq!(w.height_profile().as_slice(), &h[1..]);
    }

    #[test]
    fn statistics_match_scan(text in any_text(24)) {
        let w: PathWord = text.parse().unwrap();
        let s = scan(&text);
        let count = |f: &dyn Fn(bool, i64) -> bool| s.iter().filter(|(u, h)| f(*u, *h)).count() as u64;
        prop_assert_eq!(peaks(&w), text.matches("UD").count() as u64);
        prop_assert_eq!(valleys(&w), text.matches("DU").count() as u64);
        prop_assert_eq!(ups_at_odd_height(&w), count(&|u, h| u && h.rem_euclid(2) == 1));
        prop_assert_eq!(ups_at_even_height(&w), count(&|u, h| u && h.rem_euclid(2) == 0));
        prop_assert_eq!(downs_at_odd_height(&w), count(&|u, h| !u && h.rem_euclid(2) == 1));
        prop_assert_eq!(downs_at_even_height(&w), count(&|u, h| !u && h.rem_euclid(2) == 0));
        prop_assert_eq!(contacts(&w), count(&|u, h| (u && h == 0) || (!u && h == 1)));
        let pairs = s.windows(2)
            .filter(|p| matches!((p[0], p[1]), ((false, 1), (false, 0)) | ((true, 0), (true, 1))))
            .count() as u64;
        prop_assert_eq!(crossings(&w), pairs);
    }

    #[test]
    fn peaks_minus_valleys(text in any_text(24)) {
        prop_assume!(!text.is_empty());
        let w: PathWord = text.parse().unwrap();
        let first_up = text.starts_with('U') as i64;
        let last_up = text.ends_with('U') as i64;
        prop_assert_eq!(peaks(&w) as i64 - valleys(&w) as i64, first_up - last_up);
    }

    #[test]
    fn dyck_peaks_exceed_valleys_by_one(w in dyck(12)) {
        prop_assume!(!w.is_empty());
        prop_assert_eq!(peaks(&w), valleys(&w) + 1);
        prop_assert!(stat_record(&w).unwrap().is_prime == (contacts(&w) == 1));
    }

    #[test]
    fn contacts_bound_crossings(w in bilateral(12)) {
        prop_assert!(contacts(&w) >= crossings(&w));
    }

    #[test]
    fn phi_parse_recomposes(w in dyck(10)) {
        prop_assume!(!w.is_empty());
        let d = phi_parse(&w).unwrap();
        prop_assert_eq!(d.recompose(), w.clone());
        for wi in d.inner.iter().chain([&d.tail]) {
            prop_assert!(wi.require_dyck().is_ok());
        }
        // s counts returns to height 1 inside the first prime block.
        let text = w.to_string();
        let s = scan(&text);
        let first = s.iter().position(|&(u, h)| !u && h == 1).unwrap();
        let returns = s[..first].iter().filter(|&&(u, h)| !u && h == 2).count();
        prop_assert_eq!(d.s(), returns);
    }

    #[test]
    fn psi_parse_recomposes(w in dyck(10)) {
        prop_assume!(!w.is_empty());
        let d = psi_parse(&w).unwrap();
        prop_assert_eq!(d.recompose(), w.clone());
        for wi in d.inner.iter().chain([&d.tail]) {
            prop_assert!(wi.require_dyck().is_ok());
        }
        // s + 1 is the height of the last peak before the first return.
        let text = w.to_string();
        let h = heights(&text);
        let first = (1..h.len()).find(|&i| h[i] == 0).unwrap();
        let last_peak = (1..first).rev().find(|&i| h[i] > h[i - 1] && h[i] > h[i + 1]).unwrap();
        prop_assert_eq!(d.s() + 1, h[last_peak] as usize);
    }

    #[test]
    fn dyck_maps_are_inverse(w in dyck(40)) {
        let image = phi(&w).unwrap();
        prop_assert_eq!(psi(&image).unwrap(), w.clone());
        prop_assert_eq!(phi(&psi(&w).unwrap()).unwrap(), w.clone());
        prop_assert_eq!(image.classify(), w.classify());
        prop_assert_eq!(peaks(&image), ups_at_odd_height(&w));
        prop_assert_eq!(contacts(&image), contacts(&w));
    }

    #[test]
    fn bilateral_maps_are_inverse(w in bilateral(40)) {
        let image = phi_ext(&w).unwrap();
        prop_assert_eq!(psi_ext(&image).unwrap(), w.clone());
        prop_assert_eq!(phi_ext(&psi_ext(&w).unwrap()).unwrap(), w.clone());
        prop_assert_eq!(peaks(&image), ups_at_odd_height(&w));
        prop_assert_eq!(crossings(&image), crossings(&w));
        prop_assert_eq!(factor_classes(&image).unwrap(), factor_classes(&w).unwrap());
    }

    #[test]
    fn alpha_negates_heights(w in bilateral(16)) {
        let a = alpha(&w).unwrap();
        prop_assert_eq!(alpha(&a).unwrap(), w.clone());
        for i in 1..=w.len() {
            prop_assert_eq!(a.step_height(i).unwrap(), 1 - w.step_height(i).unwrap());
        }
        prop_assert_eq!(peaks(&a), valleys(&w));
        prop_assert_eq!(ups_at_odd_height(&a), downs_at_even_height(&w));
    }

    #[test]
    fn beta_shifts_parity(w in dyck(16)) {
        let b = beta(&w).unwrap();
        prop_assert_eq!(beta(&b).unwrap(), w.clone());
        prop_assert!(b.require_dyck().is_ok());
        if !w.is_empty() {
            prop_assert_eq!(ups_at_even_height(&b) + 1, ups_at_odd_height(&w));
        }
    }

    #[test]
    fn crossing_factors_alternate(w in bilateral(16)) {
        let f = crossing_factorize(&w).unwrap();
        prop_assert_eq!(f.recompose(), w.clone());
        prop_assert_eq!(f.crossings() as u64, crossings(&w));
        prop_assert_eq!(f.factors.len(), if w.is_empty() { 0 } else { f.crossings() + 1 });
        let classes: Vec<PathClass> = f.factors.iter().map(|x| x.classify()).collect();
        for c in &classes {
            prop_assert!(matches!(c, PathClass::Dyck | PathClass::NegativeDyck));
        }
        for pair in classes.windows(2) {
            prop_assert_ne!(pair[0], pair[1]);
        }
    }
}
