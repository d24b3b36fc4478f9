//! Randomized algebraic invariants of the exact cyclotomic scalars.

use hopfcalc_core::cyclotomic::{euler_phi, CycNumber, Rat};
use num_bigint::BigInt;
use proptest::prelude::*;

const CONDUCTORS: [u64; 7] = [1, 2, 3, 4, 6, 8, 12];

fn rat(num: i64, den: u8) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den as i64 + 1))
}

fn cyc_strategy() -> impl Strategy<Value = CycNumber> {
    (0..CONDUCTORS.len(), proptest::collection::vec((-9i64..10, 0u8..9), 12))
        .prop_map(|(ci, raw)| {
            let n = CONDUCTORS[ci];
            let coeffs: Vec<Rat> = raw
                .into_iter()
                .take(euler_phi(n) as usize)
                .map(|(p, q)| rat(p, q))
                .collect();
            CycNumber::from_coeffs(n, coeffs).unwrap()
        })
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(
        a in cyc_strategy(), b in cyc_strategy(), c in cyc_strategy()
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes_and_associates(
        a in cyc_strategy(), b in cyc_strategy(), c in cyc_strategy()
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(
        a in cyc_strategy(), b in cyc_strategy(), c in cyc_strategy()
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_elements_invert(a in cyc_strategy()) {
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn conjugation_is_a_multiplicative_involution(
        a in cyc_strategy(), b in cyc_strategy()
    ) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn galois_maps_are_ring_maps(a in cyc_strategy(), b in cyc_strategy()) {
        // every conductor in the pool divides 24, and 5 is a unit mod 24
        let (ea, eb) = (a.embedded(24).unwrap(), b.embedded(24).unwrap());
        prop_assert_eq!((&ea * &eb).galois(5), &ea.galois(5) * &eb.galois(5));
        prop_assert_eq!((&ea + &eb).galois(5), &ea.galois(5) + &eb.galois(5));
    }

    #[test]
    fn serialization_round_trips(a in cyc_strategy()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: CycNumber = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
