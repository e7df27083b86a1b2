import pytest
from sadic.config import DEFAULT_BUDGETS, MAX_DEPTH, MAX_LANGUAGE_LENGTH, MAX_SYMBOLS, SERVICE, WINDOW_LIMIT, Budgets


def getter(settings):
    def get(service, key):
        assert service == SERVICE
        return settings.get(key)

    return get


def test_defaults_without_settings():
    assert Budgets.from_config(getter({})) == DEFAULT_BUDGETS


def test_settings_override_defaults():
    budgets = Budgets.from_config(getter({MAX_DEPTH: "12", MAX_SYMBOLS: 5000, MAX_LANGUAGE_LENGTH: "256"}))
    assert (budgets.max_depth, budgets.max_symbols, budgets.max_language_length) == (12, 5000, 256)
    assert budgets.window_limit == DEFAULT_BUDGETS.window_limit


@pytest.mark.parametrize("raw", ["", "$SADIC_WINDOW_LIMIT", "lots", "0", "-3", None])
def test_unusable_settings_are_ignored(raw):
    assert Budgets.from_config(getter({WINDOW_LIMIT: raw})).window_limit == DEFAULT_BUDGETS.window_limit


@pytest.mark.parametrize("field", ["max_depth", "scan_step", "max_enumeration"])
def test_budgets_must_be_positive(field):
    with pytest.raises(ValueError, match=field):
        Budgets(**{field: 0})
