from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager


class OrderManagerFactory(FactoryInterface):
    """ Factory for creating order manager object
    """
    def invoke(self, service_manager):
        return OrderManager(
            structure_manager=service_manager.get(StructureManager.__name__)
        )
