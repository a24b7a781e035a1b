import numpy as np
import pytest

from zenscope.dataset.synthetic import synthetic_market
from zenscope.dependence.concordance import pseudo_observations
from zenscope.dependence.copula import simulate_t_copula
from zenscope.run.config import PipelineConfig
from zenscope.run.run import Run
from zenscope.run.run_info import RunInfo
from zenscope.stores.local import LocalOutputStore

##############################
# VARIABLES
##############################

SEED = 7

PRICES_CSV = "date,AAA,BBB,CCC\n2020-01-01,100,50,NA\n2020-01-02,101,,20\n2020-01-03,102,52,21\n"
SECTORS_CSV = "ticker,sector,subsector\nAAA,Energy,Oil\nBBB,Energy,Gas\nCCC,Utilities,Power\n"

RHO = 0.5
NU = 4.0


##############################
# DATA
##############################


# Tmp root
@pytest.fixture(scope="session")
def temp_folder(tmp_path_factory):
    return tmp_path_factory.mktemp("data")


# Sample price csv
@pytest.fixture(scope="session")
def prices_path(temp_folder):
    pth = temp_folder / "prices.csv"
    pth.write_text(PRICES_CSV)
    return pth


# Sample sector csv
@pytest.fixture(scope="session")
def sectors_path(temp_folder):
    pth = temp_folder / "sectors.csv"
    pth.write_text(SECTORS_CSV)
    return pth


# Small synthetic market, complete
@pytest.fixture(scope="session")
def market():
    return synthetic_market(d=6, n_obs=400, n_sectors=2, seed=SEED)


# Bivariate t copula sample
@pytest.fixture(scope="session")
def t_sample():
    P = np.array([[1.0, RHO], [RHO, 1.0]])
    return simulate_t_copula(P, NU, 2000, np.random.default_rng(SEED))


# Pseudo-observations of a 4 dimensional t copula sample
@pytest.fixture(scope="session")
def pobs4():
    P = np.full((4, 4), 0.4)
    np.fill_diagonal(P, 1.0)
    P[0, 1] = P[1, 0] = 0.7
    sample = simulate_t_copula(P, 5.0, 600, np.random.default_rng(SEED))
    return pseudo_observations(sample, tickers=["A", "B", "C", "D"])


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


##############################
# CONFIG
##############################


@pytest.fixture
def config(tmp_path):
    return PipelineConfig(seed=SEED, out_dir=str(tmp_path / "out"))


@pytest.fixture
def run(config):
    store = LocalOutputStore(config.out_dir)
    return Run(RunInfo("run-test", "test", store.path, config), store)
