from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.util.managers.settings_manager import SettingsManager


class SettingsFactory(FactoryInterface):
    """ Settings factory for building settings from the environment
    """

    def invoke(self, service_manager):
        return SettingsManager().load()
