from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.order.data.order_data import OrderData
from modules.order.managers.distribution_manager import DistributionManager


class OrderDataFactory(FactoryInterface):
    """ Factory for creating order data object
    """
    def invoke(self, service_manager):
        return OrderData(
            distribution_manager=service_manager.get(DistributionManager.__name__)
        )
