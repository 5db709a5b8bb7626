/// Resource caps shared by the exact (exponential) procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of clauses a resolution closure may reach.
    pub closure: usize,
    /// Maximum number of variables enumerated by literal-set checks
    /// (`2^enumeration` complete literal sets).
    pub enumeration: usize,
    /// Maximum number of optional prime implicates in a minimization search.
    pub pool: usize,
    /// Maximum number of splits applied by an iterated repair.
    pub splits: usize,
}

impl Limits {
    pub const DEFAULT_CLOSURE: usize = 100_000;
    pub const DEFAULT_ENUMERATION: usize = 20;
    pub const DEFAULT_POOL: usize = 24;
    pub const DEFAULT_SPLITS: usize = 16;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            closure: Self::DEFAULT_CLOSURE,
            enumeration: Self::DEFAULT_ENUMERATION,
            pool: Self::DEFAULT_POOL,
            splits: Self::DEFAULT_SPLITS,
        }
    }
}
