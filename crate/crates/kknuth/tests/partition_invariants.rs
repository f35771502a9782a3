//! Cross-checks between the equivalence-class engine and the
//! per-word invariants: every quantity that is supposed to be
//! constant on a class really is, over full universes.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use kknuth::{
    compute_partition, hecke_permutation, hook_class_members, outer_hook, row_word,
    structural_urt_verdict, words_equivalent, ClassPartition, Tableau, Verdict,
};

fn partition(n: u32) -> &'static ClassPartition {
    static CACHE: OnceLock<Vec<OnceLock<ClassPartition>>> = OnceLock::new();
    let slots = CACHE.get_or_init(|| (0..=6).map(|_| OnceLock::new()).collect());
    slots[n as usize].get_or_init(|| compute_partition(n))
}

fn classes_of(partition: &ClassPartition) -> Vec<Vec<Tableau>> {
    partition
        .classes()
        .into_iter()
        .map(|ids| ids.into_iter().map(|id| partition.universe().get(id)).collect())
        .collect()
}

fn t(rows: &[&[u32]]) -> Tableau {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    Tableau::from_rows(&rows).expect("test tableau is increasing")
}

#[test]
fn class_invariants_are_constant_on_five_letters() {
    let mut distinct_perms = BTreeSet::new();
    let classes = classes_of(partition(5));
    let class_count = classes.len();
    for class in classes {
        let first = &class[0];
        let word = row_word(first);
        let perm = hecke_permutation(&word);
        let hook = outer_hook(first);
        let lis = word.lis();
        let lds = word.lds();
        distinct_perms.insert(perm.images().to_vec());
        for member in &class {
            let w = row_word(member);
            assert_eq!(hecke_permutation(&w), perm);
            assert_eq!(outer_hook(member), hook);
            assert_eq!(member.support(), first.support());
            assert_eq!(w.lis(), lis);
            assert_eq!(w.lds(), lds);
            // The extremes of the reading word are visible in the shape.
            let rows = member.straight_rows().expect("universe tableaux are straight");
            let first_row_len = rows.first().map_or(0, Vec::len);
            assert_eq!(w.lis(), first_row_len);
            assert_eq!(w.lds(), rows.len());
        }
    }
    assert!(distinct_perms.len() <= class_count);
}

#[test]
fn transposing_permutes_the_classes() {
    let partition = partition(5);
    for class in classes_of(partition) {
        let image: BTreeSet<Tableau> = class.iter().map(Tableau::transpose).collect();
        let expected = partition
            .class_of(&class[0].transpose())
            .expect("transpose stays in the universe");
        assert_eq!(image, expected);
    }
}

#[test]
fn growing_the_alphabet_never_splits_or_merges_classes() {
    for small in [4u32, 5] {
        let coarse = partition(small + 1);
        let mut restricted: HashMap<usize, BTreeSet<Tableau>> = HashMap::new();
        for id in 0..coarse.universe().len() {
            let tableau = coarse.universe().get(id);
            if tableau.max_label() <= small {
                restricted
                    .entry(coarse.root_of_id(id))
                    .or_default()
                    .insert(tableau);
            }
        }
        let shrunk: BTreeSet<BTreeSet<Tableau>> = restricted.into_values().collect();
        let fine: BTreeSet<BTreeSet<Tableau>> = classes_of(partition(small))
            .into_iter()
            .map(|class| class.into_iter().collect())
            .collect();
        assert_eq!(shrunk, fine);
    }
}

#[test]
fn shape_extremes_can_be_missing_from_a_class() {
    let members = [
        t(&[&[1, 2, 5], &[2, 3, 6], &[3], &[4], &[5]]),
        t(&[&[1, 2, 5], &[2, 3], &[3, 6], &[4], &[5]]),
        t(&[&[1, 2, 5], &[2, 3, 6], &[3, 6], &[4], &[5]]),
        t(&[&[1, 2, 5], &[2, 3], &[3, 5], &[4, 6], &[5]]),
    ];
    let class = partition(6)
        .class_of(&members[0])
        .expect("members use labels at most 6");
    assert_eq!(class, members.iter().cloned().collect::<BTreeSet<_>>());

    let shapes: Vec<Vec<usize>> = members
        .iter()
        .map(|m| {
            let rows = m.straight_rows().expect("members are straight");
            rows.iter().map(Vec::len).collect()
        })
        .collect();
    let contains = |a: &[usize], b: &[usize]| {
        b.len() <= a.len() && b.iter().zip(a).all(|(x, y)| x <= y)
    };
    let has_max = shapes.iter().any(|m| shapes.iter().all(|s| contains(m, s)));
    let has_min = shapes.iter().any(|m| shapes.iter().all(|s| contains(s, m)));
    assert!(!has_max);
    assert!(!has_min);
}

#[test]
fn interval_restrictions_of_equivalent_tableaux_stay_equivalent() {
    for class in classes_of(partition(4)) {
        if class.len() < 2 {
            continue;
        }
        for (a, b) in [(1, 2), (2, 4), (1, 3), (2, 3)] {
            let words: Vec<_> = class
                .iter()
                .map(|member| {
                    let filling = member.restrict(a, b).expect("valid interval");
                    let restricted =
                        Tableau::new(filling).expect("restrictions stay increasing");
                    row_word(&restricted)
                })
                .collect();
            for pair in words.windows(2) {
                assert!(
                    words_equivalent(&pair[0], &pair[1]),
                    "restriction to [{a}, {b}] broke a class"
                );
            }
        }
    }
}

#[test]
fn structural_yes_verdicts_are_sound_on_six_letters() {
    for n in 5..=6 {
        let partition = partition(n);
        for tableau in partition.universe().tableaux() {
            if structural_urt_verdict(&tableau).expect("universe tableaux are straight")
                == Verdict::Yes
            {
                let size = partition
                    .class_size_of(&tableau)
                    .expect("tableau is in the universe");
                assert_eq!(size, 1, "structural yes on {tableau:?} but class size {size}");
            }
        }
    }
}

#[test]
fn row_and_column_insertions_stay_inside_the_hook_class() {
    let base = t(&[&[1, 2, 4, 5], &[2], &[3], &[5], &[6]]);
    let produced = hook_class_members(&base).expect("initial hook input");
    let class = partition(6).class_of(&base).expect("labels at most 6");
    assert!(produced.is_subset(&class));

    // The class also holds a member the insertions never reach.
    let extra = t(&[&[1, 2, 4, 5], &[2, 4, 5], &[3], &[5], &[6]]);
    assert!(class.contains(&extra));
    assert!(!produced.contains(&extra));
}
