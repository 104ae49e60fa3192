//! Strongly connected components restricted to a subset of transitions.

/// A component with at least one internal transition.
#[derive(Clone, Debug)]
pub struct Component {
    pub states: Vec<usize>,
    pub transitions: Vec<usize>,
}

/// Iterative Tarjan over the transitions `ids` (indices into `edges`). Only components
/// containing a cycle are returned; their `transitions` are the given ids lying inside.
pub fn components(states: usize, edges: &[(usize, usize)], ids: &[usize]) -> Vec<Component> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); states];
    for &t in ids {
        adj[edges[t].0].push(t);
    }
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; states];
    let mut low = vec![0; states];
    let mut on_stack = vec![false; states];
    let mut comp_of = vec![UNSEEN; states];
    let mut stack = Vec::new();
    let mut next = 0;
    let mut comps: Vec<Vec<usize>> = Vec::new();
    // (state, next adjacency slot)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..states {
        if index[root] != UNSEEN || adj[root].is_empty() {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, slot)) = call.last() {
            if slot < adj[v].len() {
                let w = edges[adj[v][slot]].1;
                call.last_mut().unwrap().1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    let id = comps.len();
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp_of[w] = id;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    comps.push(members);
                }
            }
        }
    }

    let mut internal: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    for &t in ids {
        let (s, d) = edges[t];
        if comp_of[s] != UNSEEN && comp_of[s] == comp_of[d] {
            internal[comp_of[s]].push(t);
        }
    }
    comps
        .into_iter()
        .zip(internal)
        .filter(|(_, ts)| !ts.is_empty())
        .map(|(states, mut transitions)| {
            transitions.sort_unstable();
            Component { states, transitions }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cycles_only() {
        // 0 -> 1 -> 2 -> 1, 3 -> 3, 4 isolated
        let edges = [(0, 1), (1, 2), (2, 1), (3, 3)];
        let mut comps = components(5, &edges, &[0, 1, 2, 3]);
        comps.sort_by_key(|c| c.states.clone());
        let states: Vec<_> = comps.iter().map(|c| c.states.clone()).collect();
        assert_eq!(states, vec![vec![1, 2], vec![3]]);
        assert_eq!(comps[0].transitions, vec![1, 2]);
    }

    #[test]
    fn respects_subset() {
        let edges = [(0, 1), (1, 0)];
        assert!(components(2, &edges, &[0]).is_empty());
        assert_eq!(components(2, &edges, &[0, 1]).len(), 1);
    }

    #[test]
    fn long_chain_does_not_overflow() {
        let n = 200_000;
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let ids: Vec<usize> = (0..n).collect();
        let comps = components(n, &edges, &ids);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].states.len(), n);
    }
}
