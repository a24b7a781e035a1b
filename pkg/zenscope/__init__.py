"""
Pairwise dependence analysis and zenplots for high-dimensional series.
"""
from zenscope.dataset.io import load_prices, load_sectors
from zenscope.dataset.ops import fill_missing, filter_by_completeness, neg_log_returns
from zenscope.dataset.synthetic import synthetic_market
from zenscope.dependence.concordance import pseudo_observations
from zenscope.dependence.copula import fit_biv_t, fit_joint_t
from zenscope.dependence.matrix import dependence_matrix
from zenscope.margins.garch import fit_arma_garch, fit_margins
from zenscope.zenpath.connect import connect_pairs
from zenscope.zenpath.eulerian import eulerian_all_pairs
from zenscope.zenplot.layout import layout
from zenscope.zenplot.render import render
