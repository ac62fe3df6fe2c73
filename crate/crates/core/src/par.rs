//! Data-parallel map over independent work items.
//!
//! With the `parallel` feature the work is spread over a rayon pool; without
//! it, or with `Exec::Sequential`, items run in order on the calling thread.
//! Results always come back in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// `jobs == 0` means the rayon default.
    Parallel {
        jobs: usize,
    },
}

impl Exec {
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(1) => Exec::Sequential,
            Some(j) => Exec::Parallel { jobs: j },
            None => Exec::Parallel { jobs: 0 },
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel { jobs } => parallel_map(items, f, jobs),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F, jobs: usize) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let run = || items.par_iter().map(&f).collect();
    if jobs == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => items.iter().map(&f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F, _jobs: usize) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..200).collect();
        let seq = Exec::Sequential.map(&v, |x| x * x);
        let par = Exec::Parallel { jobs: 4 }.map(&v, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(Exec::from_jobs(Some(1)), Exec::Sequential);
    }
}
