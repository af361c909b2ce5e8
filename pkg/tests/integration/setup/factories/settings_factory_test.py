from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.util.objects.settings import Settings


class SettingsFactoryTest(FactoryInterface):
    def __init__(self):
        self.__settings: Settings = Settings(
            oracle_cutoff=16,
            census_cutoff=14,
            default_truncation=64,
            series_solver="newton",
            working_dps=64,
            fit_low=200,
            fit_high=400,
            log_level="WARNING"
        )

    def invoke(self, service_manager):
        return self.__settings

    def get_settings(self) -> Settings:
        return self.__settings
