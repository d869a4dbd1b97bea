//! Addressable binary max-heap over the items `0..n`.

const ABSENT: usize = usize::MAX;

/// Max-heap keyed by `K`, addressable by item id so keys can be changed or
/// items removed in `O(log n)`. Heap slots carry a copy of their key.
#[derive(Debug, Clone)]
pub struct IndexedMaxHeap<K> {
    heap: Vec<(K, usize)>,
    pos: Vec<usize>,
    keys: Vec<K>,
}

impl<K: Ord + Copy> IndexedMaxHeap<K> {
    /// Heapifies all items `0..keys.len()` in linear time.
    pub fn from_keys(keys: Vec<K>) -> Self {
        let n = keys.len();
        let mut h = IndexedMaxHeap {
            heap: keys.iter().copied().zip(0..n).collect(),
            pos: (0..n).collect(),
            keys,
        };
        for i in (0..n / 2).rev() {
            h.sift_down(i);
        }
        h
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn contains(&self, item: usize) -> bool {
        self.pos[item] != ABSENT
    }

    pub fn key(&self, item: usize) -> K {
        self.keys[item]
    }

    pub fn peek(&self) -> Option<(usize, K)> {
        self.heap.first().map(|&(k, i)| (i, k))
    }

    pub fn pop(&mut self) -> Option<(usize, K)> {
        let (key, top) = *self.heap.first()?;
        self.remove(top);
        Some((top, key))
    }

    /// Removes `item` if present.
    pub fn remove(&mut self, item: usize) {
        let at = self.pos[item];
        if at == ABSENT {
            return;
        }
        let last = self.heap.len() - 1;
        self.swap(at, last);
        self.heap.pop();
        self.pos[item] = ABSENT;
        if at < self.heap.len() {
            self.sift_down(at);
            self.sift_up(at);
        }
    }

    /// Changes the key of a present item, restoring heap order.
    /// Keys of absent items are stored but not re-inserted.
    pub fn update(&mut self, item: usize, key: K) {
        let old = std::mem::replace(&mut self.keys[item], key);
        let at = self.pos[item];
        if at == ABSENT {
            return;
        }
        self.heap[at].0 = key;
        if key > old {
            self.sift_up(at);
        } else if key < old {
            self.sift_down(at);
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.pos[self.heap[a].1] = a;
        self.pos[self.heap[b].1] = b;
    }

    fn sift_up(&mut self, mut i: usize) {
        let entry = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if entry.0 <= self.heap[parent].0 {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.pos[self.heap[i].1] = i;
            i = parent;
        }
        self.heap[i] = entry;
        self.pos[entry.1] = i;
    }

    fn sift_down(&mut self, mut i: usize) {
        let n = self.heap.len();
        let entry = self.heap[i];
        loop {
            let left = 2 * i + 1;
            if left >= n {
                break;
            }
            let right = left + 1;
            let mut best = left;
            if right < n && self.heap[right].0 > self.heap[left].0 {
                best = right;
            }
            if self.heap[best].0 <= entry.0 {
                break;
            }
            self.heap[i] = self.heap[best];
            self.pos[self.heap[i].1] = i;
            i = best;
        }
        self.heap[i] = entry;
        self.pos[entry.1] = i;
    }
}
