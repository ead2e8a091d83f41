import pytest

from rootrand import GeneratorConfig


@pytest.fixture(scope="session")
def desk_config():
    return GeneratorConfig()


@pytest.fixture(scope="session")
def worked_config():
    # Single hand-picked pair: cube roots of 5 and 17, digits 51 onward.
    return GeneratorConfig(
        n_pairs=1,
        rounds=1,
        precision_digits=100,
        skip_digits=50,
        c1=(5,),
        c2=(17,),
        degrees=(3,),
    )
