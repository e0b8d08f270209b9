//! Sorted-vector multisets and sets used by every sequent family.

pub fn sorted<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort();
    v
}

pub fn set_of<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let mut v = sorted(items);
    v.dedup();
    v
}

pub fn set_insert<T: Ord + Clone>(set: &[T], x: T) -> Vec<T> {
    match set.binary_search(&x) {
        Ok(_) => set.to_vec(),
        Err(i) => {
            let mut v = set.to_vec();
            v.insert(i, x);
            v
        }
    }
}

pub fn set_union<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let mut v: Vec<T> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

pub fn multiset_eq<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && sorted(a) == sorted(b)
}

/// Removes one occurrence of `x`, or `None` when absent.
pub fn remove_one<T: PartialEq + Clone>(items: &[T], x: &T) -> Option<Vec<T>> {
    let i = items.iter().position(|y| y == x)?;
    let mut v = items.to_vec();
    v.remove(i);
    Some(v)
}

pub fn multiset_sum<T: Clone>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().chain(b.iter()).cloned().collect()
}

/// Some occurrence `x` of `items`, with `rest` the remaining multiset,
/// satisfies `ok`. Each distinct element is tried once.
pub fn some_principal<T: PartialEq + Clone>(items: &[T], ok: impl Fn(&T, &[T]) -> bool) -> bool {
    items.iter().enumerate().any(|(i, x)| {
        items[..i].iter().all(|y| y != x)
            && ok(x, &remove_one(items, x).expect("x occurs in items"))
    })
}
