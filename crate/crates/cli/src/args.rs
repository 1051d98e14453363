use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "quotcoh",
    version,
    about = "Exact cohomology of tautological bundles on Quot schemes of the projective line",
    long_about = "Exact cohomology of tautological bundles on Quot schemes of the projective line.\n\n\
                  All integers in the output are decimal strings. Exit status: 0 on success, 1 when a \
                  verification did not hold, 2 on invalid input.\n\n\
                  Set QUOTCOH_CACHE_DIR to keep Littlewood-Richardson tables between runs."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads; all available cores by default.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood-Richardson coefficient c^gamma_{alpha,beta}, or the whole
    /// product S_alpha ⊗ S_beta when --gamma is omitted.
    Lr(LrArgs),

    /// Cauchy decomposition of ∧^ell(V ⊗ W) into S_{λ†}(V) ⊗ S_λ(W).
    Cauchy(CauchyArgs),

    /// Borel-Weil-Bott for S_quot(B) ⊗ S_sub(A) on the Grassmannian G(d, n)
    /// of n-dimensional quotients, 0 → A → C^d → B → 0.
    Bwb(BwbArgs),

    /// The n-index of a partition, or its (k, n)-index with --k.
    Index(IndexArgs),

    /// Euler characteristic of a tautological sheaf on Quot(E, n, r), summed
    /// along the Koszul resolution of the embedding into two Grassmannians.
    Chi(SheafArgs),

    /// Cohomology of every Koszul term, and of the sheaf itself when every
    /// term of positive degree is acyclic.
    Cohomology(SheafArgs),

    /// Checks of the vanishing and computation statements.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },

    /// Compare the resolution's Euler characteristic with the binomial
    /// prediction for quotients of positive rank.
    Conjecture {
        #[command(subcommand)]
        which: ConjectureCommand,
    },

    /// Compare generating series of Euler characteristics with their closed
    /// forms, coefficient by coefficient.
    Series {
        #[command(subcommand)]
        which: SeriesCommand,
    },
}

#[derive(Args, Debug)]
pub struct LrArgs {
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub beta: String,
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Args, Debug)]
pub struct CauchyArgs {
    #[arg(long)]
    pub ell: u32,
    #[arg(long)]
    pub rank_left: usize,
    #[arg(long)]
    pub rank_right: usize,
}

#[derive(Args, Debug)]
pub struct BwbArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Weight on the quotient B, length n; zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub quot: Option<String>,
    /// Weight on the subbundle A, length d - n; zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub sub: Option<String>,
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
}

/// Which embedding to use. A twist is given either by --m and --side, where
/// L = O(m) on g2 and O(m - 1) on g1, or by --degL, which picks the smallest
/// admissible embedding.
#[derive(Args, Debug, Clone)]
pub struct EmbedArgs {
    #[arg(long = "N")]
    pub big_n: usize,
    #[arg(long)]
    pub n: usize,
    /// Rank of the quotients.
    #[arg(long, default_value_t = 0)]
    pub r: usize,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "deg_l")]
    pub m: Option<i64>,
    #[arg(long = "degL", allow_hyphen_values = true, conflicts_with_all = ["m", "side"])]
    pub deg_l: Option<i64>,
    /// Degrees a_1,...,a_N of E = ⊕ O(a_i); trivial when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub splitting: Option<String>,
    /// Grassmannian whose quotient bundle carries the twist.
    #[arg(long)]
    pub side: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    Wedge,
    Sym,
    Dual,
}

#[derive(Args, Debug, Clone)]
pub struct TwistArgs {
    #[arg(long)]
    pub k: Option<usize>,
    /// Exterior degrees k_1,...,k_s of a product of dualized exterior powers.
    #[arg(long)]
    pub ks: Option<String>,
    /// 1 puts the first dual factor on g1, so its twist has one degree less.
    #[arg(long, default_value_t = 0)]
    pub gap: u8,
}

#[derive(Args, Debug)]
pub struct SheafArgs {
    #[command(flatten)]
    pub embed: EmbedArgs,
    #[arg(long, value_enum)]
    pub functor: Functor,
    #[command(flatten)]
    pub twist: TwistArgs,
}

#[derive(Args, Debug)]
pub struct FixedSheafArgs {
    #[command(flatten)]
    pub embed: EmbedArgs,
    #[command(flatten)]
    pub twist: TwistArgs,
}

#[derive(Args, Debug)]
pub struct GridArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Only partitions with at most this many boxes.
    #[arg(long)]
    pub max_size: Option<u32>,
}

#[derive(Args, Debug)]
pub struct DualGridArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Number of dual factors.
    #[arg(long, default_value_t = 0)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_size: u32,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// For r = 0 and 0 ≤ k ≤ n, ∧^k L^{[n]} has cohomology only in degree
    /// 0, equal to ∧^k H^0(E ⊗ L).
    #[command(name = "theorem-a")]
    TheoremA(FixedSheafArgs),

    /// For r = 0 and 0 ≤ k ≤ n, Sym^k L^{[n]} has cohomology only in degree
    /// 0, equal to Sym^k H^0(E ⊗ L).
    #[command(name = "theorem-b")]
    TheoremB(FixedSheafArgs),

    /// For r = 0 and at most N - 1 factors, not all k_i zero, the product of
    /// the (∧^{k_i} L_i^{[n]})^∨ has no cohomology at all, provided the
    /// degrees of the L_i differ by at most one. Every Koszul term is
    /// checked acyclic.
    #[command(name = "theorem-c")]
    TheoremC(FixedSheafArgs),

    /// Term-by-term certificate: every Koszul term of positive degree is
    /// acyclic and term 0 has cohomology only in degree 0 (for dual products
    /// every term is acyclic).
    Props(SheafArgs),

    /// For λ ≠ 0 in the (2n) × (d - n - 1) box with an n-index and
    /// 0 ≤ k ≤ n, every summand of S_λ(B^∨ ⊕ B^∨) ⊗ ∧^k B on G(d, n) is
    /// acyclic.
    #[command(name = "prop-3.1")]
    Prop31(GridArgs),

    /// Same box, Sym^k B in place of ∧^k B: every k when the index is
    /// below n, k ≤ n when it equals n.
    #[command(name = "prop-3.2")]
    Prop32(GridArgs),

    /// Dual products: S_λ(B^∨ ⊕ B^∨) tensored with r powers ∧^{k_i} B^∨ for
    /// λ with an n-index, or with r - 1 of them when λ has a (k, n)-index, for
    /// λ in the box (2n) × (d - n - r - 1). Every summand is acyclic.
    #[command(name = "prop-3.3")]
    Prop33(DualGridArgs),

    /// The four constraints on every triple (α, β, γ) with
    /// c^λ_{αβ} c^γ_{αβ} ≠ 0 that drive the vanishing statements: α_i ≥ i,
    /// the prefix bound on α + β, i + 1 ≤ γ_i ≤ d - n + i - 1, and the bound
    /// on the next row of γ.
    Lemmas(LemmaArgs),
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub embed: EmbedArgs,
    #[command(flatten)]
    pub twist: TwistArgs,
}

#[derive(Subcommand, Debug)]
pub enum ConjectureCommand {
    /// χ(∧^k L^{[n]}) = binom(χ(E ⊗ L), k) for k ≤ n + r(a + 1), n = a(N - r) + b.
    Wedge(ConjectureArgs),
    /// χ(Sym^k L^{[n]}) = binom(χ(E ⊗ L) + k - 1, k) in the same range.
    Sym(ConjectureArgs),
    /// χ of a product of at most N - r - 1 dualized exterior powers vanishes
    /// for total degree up to n + (N - r)(a + 1), n = ar + b.
    Dual(ConjectureArgs),
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long = "degL", allow_hyphen_values = true)]
    pub deg_l: i64,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub splitting: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum SeriesCommand {
    /// Σ χ(∧^k L^{[n]}) q^n y^k = (1 - q)^{-1} (1 + qy)^{χ(E ⊗ L)}, all k.
    Wedge(SeriesArgs),
    /// Σ χ(Sym^k L^{[n]}) q^n y^k = (1 - q)^{-1} (1 - qy)^{-χ(E ⊗ L)} for k ≤ n.
    Sym(SeriesArgs),
    /// Σ χ((∧^k L^{[n]})^∨) q^n y^k = (1 - q)^{-1}: only k = 0 contributes.
    Dual(SeriesArgs),
}
