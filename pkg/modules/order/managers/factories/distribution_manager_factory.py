from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.order.managers.distribution_manager import DistributionManager


class DistributionManagerFactory(FactoryInterface):
    """ Factory for creating distribution manager object
    """
    def invoke(self, service_manager):
        return DistributionManager()
