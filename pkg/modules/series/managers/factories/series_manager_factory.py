from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.series.managers.series_manager import SeriesManager


class SeriesManagerFactory(FactoryInterface):
    """ Factory for creating series manager object
    """
    def invoke(self, service_manager):
        return SeriesManager()
