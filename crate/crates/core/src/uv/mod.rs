//! Symbolic presentations over `Q(v)`: the Drinfeld–Jimbo algebra, the loop
//! algebra with a PBW rewriting system, the maps between them, and
//! evaluation into the Kronecker double.

mod eval;
mod integral;
mod loop_nf;
mod maps;
mod term;

pub use eval::{ev_letter, ev_q};
pub use integral::{
    composition_loop, composition_word, is_integral, one_ab, one_ab_printed, p_elem, pbw_rank, plus_twist, random_loop_word,
    refl_formula, small_pbw_monomials, tube_certificate, tube_certificate_terms, certify_p, IntegralCertificate, IntegralityReport, PSeries,
    ReflWeight,
};
pub use maps::{
    coxeter_a, coxeter_a_loop, dj_relators, g_letter, lusztig_letter, lusztig_s, map_g, verify_hom, GTable, SymTable,
    HomCheck, Relator, Sym,
};
pub use loop_nf::{
    loop_normal_form, psi, to_mono, LoopLetter, LoopNormalForm, LoopPoly, LoopVariant, Mono,
    PbwMonomial, RewriteBounds, Rewriter, Strategy,
};
pub use term::{commutator, parse_term, Letter, PresTerm, Presentation, Word};
